#ifndef SYMPOLY_BUDGET_HPP
#define SYMPOLY_BUDGET_HPP

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

#include "types.hpp"

namespace sympoly {

/// Enumeration caps. Every exhaustive routine checks its cap up front (or
/// while running, for output-sensitive ones) and throws SizeBudgetExceeded
/// or CycleBudgetExceeded instead of running away.
struct Budget {
    std::uint64_t max_cycles = 1'000'000;
    std::size_t max_flat_edges = 20;
    std::size_t max_mobius_flats = 1u << 14;
    std::size_t max_face_lattice_dim = 8;
    std::size_t max_lattice_vertices = 8;
    std::size_t max_section_dim = 4;
    std::uint64_t max_flow_assignments = 100'000'000;
    std::uint64_t max_words = 10'000'000;

    /// Parses "key=value,key=value". Unknown keys are rejected so typos
    /// in SYMPOLY_BUDGET do not go unnoticed.
    static Budget parse(const std::string& text) { return parse(text, Budget()); }

    static Budget parse(const std::string& text, Budget base)
    {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::InvalidArgument, "budget entry without '=': " + item);
            std::string key = item.substr(0, eq);
            std::uint64_t value = 0;
            try {
                value = std::stoull(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidArgument, "budget value is not an integer: " + item);
            }
            if (key == "cycles")
                base.max_cycles = value;
            else if (key == "flat_edges")
                base.max_flat_edges = value;
            else if (key == "mobius_flats")
                base.max_mobius_flats = value;
            else if (key == "face_dim")
                base.max_face_lattice_dim = value;
            else if (key == "lattice_vertices")
                base.max_lattice_vertices = value;
            else if (key == "section_dim")
                base.max_section_dim = value;
            else if (key == "flows")
                base.max_flow_assignments = value;
            else if (key == "words")
                base.max_words = value;
            else
                throw Error(ErrorKind::InvalidArgument, "unknown budget key: " + key);
        }
        return base;
    }

    static Budget from_env()
    {
        const char* env = std::getenv("SYMPOLY_BUDGET");
        return env ? parse(env) : Budget();
    }
};

inline const Budget& default_budget()
{
    static const Budget budget = Budget::from_env();
    return budget;
}

} // namespace sympoly

#endif
