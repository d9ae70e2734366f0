#ifndef IVPOLY_VERSION_HPP
#define IVPOLY_VERSION_HPP

namespace ivpoly {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace ivpoly

#endif
