#ifndef ISOELL_ERRORS_HPP
#define ISOELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isoell {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};
struct UnknownVariable : Error {
    using Error::Error;
};
struct NotAUnit : Error {
    using Error::Error;
};
struct InvalidDescriptor : Error {
    using Error::Error;
};
struct NotDiagonalizable : Error {
    using Error::Error;
};
struct InvalidWeight : Error {
    using Error::Error;
};
struct InvalidGroupPoint : Error {
    using Error::Error;
};
struct NotInPGL2 : Error {
    using Error::Error;
};
struct UseWildModule : Error {
    using Error::Error;
};
struct InconsistentData : Error {
    using Error::Error;
};
struct NotSupported : Error {
    using Error::Error;
};
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct InvalidFamily : Error {
    using Error::Error;
};
struct InvalidLocalAction : Error {
    using Error::Error;
};

}  // namespace isoell

#endif
