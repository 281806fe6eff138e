#pragma once

#include <stdexcept>
#include <string>

namespace okcaps {

/* Domain-level failures (bad geometry, infeasible cuts, ...). The CLI maps
 * these to exit code 2 with a structured JSON body; malformed input maps to
 * exit code 1 via std::runtime_error and friends. */
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/* A weight could not be cut into the polygon being rebuilt. Carries the
 * index of the failing node in preorder and the weight that did not fit. */
class polytopality_error : public domain_error {
public:
    polytopality_error(const std::string& msg, int node_index, std::string weight)
        : domain_error("polytopality", msg), node_index_(node_index),
          weight_(std::move(weight)) {}
    int node_index() const { return node_index_; }
    const std::string& weight() const { return weight_; }

private:
    int node_index_;
    std::string weight_;
};

inline domain_error degenerate_polygon() {
    return domain_error("degenerate-polygon", "degenerate polygon");
}

} // namespace okcaps
