#pragma once

#include <string>
#include <string_view>

namespace dimon {

// DI: all partial isometries of C_n. ODI / MDI / OPDI: the order-preserving,
// monotone and orientation-preserving submonoids.
enum class MonoidKind { DI, ODI, MDI, OPDI };

std::string to_string(MonoidKind kind);
// Lowercase tokens di|odi|mdi|opdi. Throws ParseError otherwise.
MonoidKind parse_kind(std::string_view token);

inline constexpr MonoidKind kStudiedKinds[] = {MonoidKind::ODI, MonoidKind::MDI,
                                               MonoidKind::OPDI};

}  // namespace dimon
