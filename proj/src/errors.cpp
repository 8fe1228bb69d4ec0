#include "iwtsteg/errors.hpp"

namespace iwtsteg {

const char* errc_name(errc c) {
    switch (c) {
        case errc::io: return "io";
        case errc::dimension: return "dimension";
        case errc::capacity: return "capacity";
        case errc::self_check: return "self_check";
        case errc::payload_corrupt: return "payload_corrupt";
        case errc::wrong_key: return "wrong_key";
        case errc::format: return "format";
        case errc::mode_mismatch: return "mode_mismatch";
        case errc::internal: return "internal";
    }
    return "unknown";
}

} // namespace iwtsteg
