#ifndef PAIRDOM_ERROR_HPP
#define PAIRDOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pairdom {

// Error codes shared across the library. CLI maps all of these to exit 2.
enum class Errc {
    self_loop,
    duplicate_edge,
    out_of_range,
    bad_pairing,
    isolated_vertex,
    not_a_tree,
    trivial_tree,
    syntax,
    not_3sat,
    repeated_var,
    too_large,
    bad_spec,
    io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace pairdom

#endif
