#pragma once

#include <stdexcept>
#include <string>

namespace bqa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BQA_DEFINE_ERROR(Name)                       \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  }

BQA_DEFINE_ERROR(DisconnectedQuiver);
BQA_DEFINE_ERROR(NotAdmissible);
BQA_DEFINE_ERROR(BadRelation);
BQA_DEFINE_ERROR(SyntaxError);
BQA_DEFINE_ERROR(ZeroModule);
BQA_DEFINE_ERROR(DomDimZero);
BQA_DEFINE_ERROR(InvalidKupisch);
BQA_DEFINE_ERROR(NotNakayama);
BQA_DEFINE_ERROR(NotBasic);
BQA_DEFINE_ERROR(NotLocal);
BQA_DEFINE_ERROR(InvalidModule);

#undef BQA_DEFINE_ERROR

}  // namespace bqa
