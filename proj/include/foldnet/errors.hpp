#ifndef FOLDNET_ERRORS_HPP
#define FOLDNET_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace foldnet {

/// Input topology that cannot be turned into a shell or a net.
class StructuralError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A document that does not match the polyhedron or result schema.
class SchemaError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Geometry was requested on zero-area or coordinate-free input.
class DegenerateInput : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A search stopped because it hit its recursion-node budget or deadline.
class BudgetExceeded : public std::runtime_error
{
public:
    BudgetExceeded(const std::string& what, std::uint64_t nodes_visited, int interior_size) :
        std::runtime_error(what), nodes_visited(nodes_visited), interior_size(interior_size)
    {
    }

    std::uint64_t nodes_visited;
    int interior_size;
};

/// Every ranked net self-overlaps; fewer-leaf cuts would be needed.
class FallbackExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace foldnet

#endif
