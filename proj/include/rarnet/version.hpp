#ifndef RARNET_VERSION_HPP
#define RARNET_VERSION_HPP

namespace rarnet {

inline constexpr const char* kVersion = "0.1.0";

} // namespace rarnet

#endif
