#pragma once

#include <stdexcept>
#include <string>

namespace noodle {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
      public:
	explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Illegal character or malformed lexical element. Carries 1-based position.
class LexError : public Error {
      public:
	LexError(const std::string &msg, int line, int column)
	    : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)), line(line), column(column)
	{
	}
	int line;
	int column;
};

/// Syntax error in strict parsing mode. Carries 1-based position.
class ParseError : public Error {
      public:
	ParseError(const std::string &msg, int line, int column)
	    : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)), line(line), column(column)
	{
	}
	int line;
	int column;
};

class FormatError : public Error {
      public:
	explicit FormatError(const std::string &msg) : Error(msg) {}
	FormatError(const std::string &msg, int line) : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
	int line = 0;
};

class SchemaMismatch : public Error {
      public:
	explicit SchemaMismatch(const std::string &msg) : Error(msg) {}
};

class ShapeMismatch : public Error {
      public:
	explicit ShapeMismatch(const std::string &msg) : Error(msg) {}
};

class LabelConflict : public Error {
      public:
	explicit LabelConflict(const std::string &design_id) : Error("conflicting labels for design '" + design_id + "'") {}
};

class InsufficientData : public Error {
      public:
	explicit InsufficientData(const std::string &msg) : Error(msg) {}
};

class DivergenceError : public Error {
      public:
	explicit DivergenceError(const std::string &msg) : Error(msg) {}
};

class ArgumentError : public Error {
      public:
	explicit ArgumentError(const std::string &msg) : Error(msg) {}
};

class ConfigError : public Error {
      public:
	explicit ConfigError(const std::string &msg) : Error(msg) {}
};

class EmptyClass : public Error {
      public:
	explicit EmptyClass(const std::string &cls) : Error("no calibration examples for class " + cls) {}
};

class EmptyInput : public Error {
      public:
	explicit EmptyInput(const std::string &msg) : Error(msg) {}
};

class OneClassOnly : public Error {
      public:
	explicit OneClassOnly(const std::string &msg) : Error(msg) {}
};

class LengthMismatch : public Error {
      public:
	explicit LengthMismatch(const std::string &msg) : Error(msg) {}
};

class MissingModality : public Error {
      public:
	explicit MissingModality(const std::string &msg) : Error(msg) {}
};

class MissingArm : public Error {
      public:
	explicit MissingArm(const std::string &msg) : Error(msg) {}
};

} // namespace noodle
