#pragma once

// GCC/Clang 128-bit integers, marked as an extension so -Wpedantic stays quiet.
namespace isoclass::detail {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

} // namespace isoclass::detail
