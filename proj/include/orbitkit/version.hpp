// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_VERSION_HPP
#define ORBITKIT_VERSION_HPP

namespace orbitkit {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
