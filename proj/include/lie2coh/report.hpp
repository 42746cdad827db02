#pragma once

// Structured violation reports produced by the axiom checkers.

#include "graded.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lie2coh {

struct Violation {
    std::string equation;           // e.g. "leibniz", "anticomm", "hemi2"
    std::vector<std::string> args;  // labeled basis tuple, e.g. {"x0", "a1"}
    Vec residual;                   // lhs - rhs

    std::string describe() const
    {
        std::ostringstream os;
        os << equation << " at (";
        for (std::size_t i = 0; i < args.size(); ++i)
            os << (i ? "," : "") << args[i];
        os << ") residual [";
        for (std::size_t i = 0; i < residual.size(); ++i)
            os << (i ? " " : "") << to_string(residual[i]);
        os << "]";
        return os.str();
    }
};

class Report {
public:
    bool ok() const { return v_.empty(); }
    bool empty() const { return v_.empty(); }
    std::size_t size() const { return v_.size(); }
    const std::vector<Violation>& violations() const { return v_; }

    // Records a violation when residual is nonzero.
    void expect_zero(const std::string& eq, std::vector<std::string> args, Vec residual)
    {
        if (!lie2coh::is_zero(residual))
            v_.push_back({eq, std::move(args), std::move(residual)});
    }
    void fail(const std::string& eq, std::vector<std::string> args = {})
    {
        v_.push_back({eq, std::move(args), {}});
    }
    void merge(const Report& o, const std::string& prefix = "")
    {
        for (auto v : o.v_) {
            if (!prefix.empty())
                v.equation = prefix + v.equation;
            v_.push_back(std::move(v));
        }
    }
    bool contains(const std::string& eq) const
    {
        for (auto& v : v_)
            if (v.equation == eq)
                return true;
        return false;
    }
    bool contains(const std::string& eq, const std::vector<std::string>& args) const
    {
        for (auto& v : v_)
            if (v.equation == eq && v.args == args)
                return true;
        return false;
    }

    friend std::ostream& operator<<(std::ostream& os, const Report& r)
    {
        for (auto& v : r.v_)
            os << v.describe() << "\n";
        return os;
    }

private:
    std::vector<Violation> v_;
};

// Basis labels: x<i> in degree 0, a<i> in degree -1 of the algebra, v<i>/u<i>
// for the module.
inline std::string lbl(char c, std::size_t i) { return std::string(1, c) + std::to_string(i); }

}  // namespace lie2coh
