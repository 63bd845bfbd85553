/*
 * Copyright 2026 The covgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "covgame/error.hpp"

namespace covgame {

using PropId = std::uint32_t;

/// Hard width of a PropSet. Solvers enforce a smaller, configurable cap.
inline constexpr std::size_t kMaxProps = 64;
inline constexpr std::size_t kDefaultPropCap = 30;

/// Set of atomic propositions over a universe of at most 64 entries.
class PropSet {
public:
    constexpr PropSet() = default;
    PropSet(std::initializer_list<PropId> ids) {
        for (PropId p : ids) insert(p);
    }

    static constexpr PropSet from_bits(std::uint64_t bits) {
        PropSet s;
        s.bits_ = bits;
        return s;
    }

    void insert(PropId p) {
        if (p >= kMaxProps)
            throw Error(ErrorKind::ApCapExceeded, "proposition id " + std::to_string(p) + " exceeds 64");
        bits_ |= std::uint64_t{1} << p;
    }

    constexpr bool contains(PropId p) const { return p < kMaxProps && ((bits_ >> p) & 1U) != 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool subset_of(PropSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr PropSet operator|(PropSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr PropSet operator&(PropSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr PropSet& operator|=(PropSet o) {
        bits_ |= o.bits_;
        return *this;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
            f(static_cast<PropId>(std::countr_zero(rest)));
    }

    std::vector<PropId> ids() const {
        std::vector<PropId> out;
        for_each([&](PropId p) { out.push_back(p); });
        return out;
    }

    constexpr auto operator<=>(const PropSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Ordered name <-> dense id table. Ids follow insertion order.
class SymbolTable {
public:
    std::uint32_t intern(std::string_view name) {
        if (auto id = find(name)) return *id;
        auto id = static_cast<std::uint32_t>(names_.size());
        names_.emplace_back(name);
        index_.emplace(names_.back(), id);
        return id;
    }

    std::optional<std::uint32_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(std::string_view name) const { return find(name).has_value(); }
    const std::string& name(std::uint32_t id) const { return names_.at(id); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }

    bool operator==(const SymbolTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

} // namespace covgame

template <>
struct std::hash<covgame::PropSet> {
    std::size_t operator()(covgame::PropSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
