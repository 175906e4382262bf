#ifndef BIEXT_VERSION_HPP
#define BIEXT_VERSION_HPP

namespace biext {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace biext

#endif  // BIEXT_VERSION_HPP
