#ifndef QSG_VERSION_HPP
#define QSG_VERSION_HPP

namespace qsg {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
