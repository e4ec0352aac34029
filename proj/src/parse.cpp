#include "psik/parse.hpp"

#include <cctype>

namespace psik {

namespace {

class Parser {
public:
    Parser(std::string_view text, CayleyCheckPolicy policy) : text_(text), policy_(policy) {}

    GroupSpec parse() {
        skip_ws();
        std::vector<GroupSpec> factors;
        factors.push_back(atom());
        skip_ws();
        while (!eof() && peek() == '*') {
            ++pos_;
            skip_ws();
            factors.push_back(atom());
            skip_ws();
        }
        if (!eof()) fail("unexpected trailing input");
        GroupSpec spec = factors.size() == 1 ? std::move(factors.front())
                                             : GroupSpec::product(std::move(factors));
        spec.validate(policy_);
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::string msg = "parse error at position " + std::to_string(pos_) + ": " + what + "\n  " +
                          std::string(text_) + "\n  " + std::string(pos_, ' ') + "^";
        throw usage_error(msg);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool consume(std::string_view lit) {
        if (text_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Natural integer() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Natural::from_decimal(text_.substr(start, pos_ - start));
    }

    unsigned small_integer(const char* what) {
        Natural n = integer();
        if (n > 1'000'000) fail(std::string(what) + " is implausibly large");
        return static_cast<unsigned>(n.to_u64());
    }

    Partition parts() {
        std::vector<unsigned> ps;
        ps.push_back(small_integer("partition part"));
        while (!eof() && peek() == ',') {
            ++pos_;
            ps.push_back(small_integer("partition part"));
        }
        return Partition(std::move(ps));
    }

    GroupSpec atom() {
        if (eof()) fail("expected a group atom");
        if (consume("file:")) {
            std::size_t start = pos_;
            while (!eof() && peek() != '*' && !std::isspace(static_cast<unsigned char>(peek())))
                ++pos_;
            if (pos_ == start) fail("expected a file path after 'file:'");
            std::string path(text_.substr(start, pos_ - start));
            return GroupSpec::cayley(load_cayley_file(path, policy_), path);
        }
        if (consume("Dic")) return GroupSpec::dicyclic(integer());
        if (consume("D")) return GroupSpec::dihedral(integer());
        if (consume("C")) return GroupSpec::cyclic(integer());
        if (consume("A[")) {
            std::map<Natural, Partition> comps;
            for (;;) {
                Natural p = integer();
                expect(':');
                Partition lam = parts();
                if (!comps.emplace(p, lam).second) fail("duplicate prime " + p.str() + " in A[...]");
                if (eof()) fail("expected ';' or ']'");
                if (peek() == ';') { ++pos_; continue; }
                expect(']');
                break;
            }
            return GroupSpec::abelian(std::move(comps));
        }
        if (consume("SD(")) {
            Natural p = integer();
            expect('^');
            unsigned r = small_integer("exponent r");
            expect(',');
            Natural m = integer();
            expect(',');
            Natural a = integer();
            expect(')');
            return GroupSpec::semidirect(p, r, m, a);
        }
        fail("expected one of C<n>, D<m>, Dic<m>, A[...], SD(...), file:<path>");
    }

    std::string_view text_;
    CayleyCheckPolicy policy_;
    std::size_t pos_ = 0;
};

} // namespace

GroupSpec parse_spec(std::string_view text, CayleyCheckPolicy policy) {
    return Parser(text, policy).parse();
}

} // namespace psik
