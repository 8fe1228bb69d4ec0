#ifndef IWTSTEG_ERRORS_HPP
#define IWTSTEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iwtsteg {

// Failure classes, one per CLI exit code.
enum class errc {
    io,               // file unreadable/unwritable/truncated
    dimension,        // bad or mismatched geometry, out-of-range samples
    capacity,         // payload does not fit the carrier
    self_check,       // stego failed its own decode verification
    payload_corrupt,  // framing, length or run-length inconsistency
    wrong_key,        // payload authentic but key does not check out
    format,           // unsupported or lossy file format, bad key string
    mode_mismatch,    // color mode does not match the image
    internal,         // broken invariant, should not happen
};

const char* errc_name(errc c);

class StegoError : public std::runtime_error {
public:
    StegoError(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw StegoError(code, what);
}

} // namespace iwtsteg

#endif
