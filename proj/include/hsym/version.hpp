#pragma once

namespace hsym {

#ifdef HSYM_VERSION
inline constexpr const char* kVersion = HSYM_VERSION;
#else
inline constexpr const char* kVersion = "0.1.0";
#endif

} // namespace hsym
