#include "cgroups/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cgroups {

std::vector<int> free_reduce(std::vector<int> word) {
    std::vector<int> out;
    for (int s : word) {
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

std::vector<int> invert_word(const std::vector<int>& word) {
    std::vector<int> out(word.rbegin(), word.rend());
    for (int& s : out) s = -s;
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Presentation run() {
        expect('<');
        Presentation p;
        p.generator_names.push_back(name());
        while (peek() == ',') {
            get();
            p.generator_names.push_back(name());
        }
        p.generator_count = static_cast<int>(p.generator_names.size());
        for (int i = 0; i < p.generator_count; ++i) {
            if (gen_index_.count(p.generator_names[i]))
                fail("duplicate generator name '" + p.generator_names[i] + "'");
            gen_index_[p.generator_names[i]] = i;
        }
        expect('|');
        relator_chain(p);
        while (peek() == ',') {
            get();
            relator_chain(p);
        }
        expect('>');
        skip_ws();
        if (pos_ < text_.size()) fail("trailing input after '>'");
        return p;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    std::map<std::string, int> gen_index_;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') { ++line_; col_ = 1; }
            else ++col_;
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char get() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        ++col_;
        return text_[pos_++];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    std::string name() {
        char c = peek();
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected generator name");
        std::string out;
        // Names are read without skipping interior whitespace.
        while (pos_ < text_.size()) {
            char d = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                out.push_back(d);
                ++pos_;
                ++col_;
            } else break;
        }
        return out;
    }

    // Longest declared generator name starting here. Juxtaposed references
    // like "ba^2" need prefix matching rather than a greedy identifier read.
    int gen_ref() {
        skip_ws();
        std::size_t run = pos_;
        while (run < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[run])) || text_[run] == '_'))
            ++run;
        for (std::size_t end = run; end > pos_; --end) {
            auto it = gen_index_.find(text_.substr(pos_, end - pos_));
            if (it != gen_index_.end()) {
                col_ += static_cast<int>(end - pos_);
                pos_ = end;
                return it->second;
            }
        }
        fail("unknown generator '" + text_.substr(pos_, run - pos_) + "'");
    }

    long integer() {
        char c = peek();
        bool neg = false;
        if (c == '-') { get(); neg = true; }
        c = peek();
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) fail("exponent too large");
            ++pos_;
            ++col_;
        }
        return neg ? -v : v;
    }

    std::vector<int> repeat(const std::vector<int>& w, long k) {
        std::vector<int> base = k < 0 ? invert_word(w) : w;
        if (k < 0) k = -k;
        std::vector<int> out;
        for (long i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
        return free_reduce(std::move(out));
    }

    bool starts_atom(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '1';
    }

    std::vector<int> atom() {
        char c = peek();
        std::vector<int> w;
        if (c == '1') {
            get();
        } else if (c == '(') {
            get();
            w = word();
            expect(')');
        } else if (c == '[') {
            get();
            std::vector<int> u = word();
            expect(',');
            std::vector<int> v = word();
            expect(']');
            w = u;
            w.insert(w.end(), v.begin(), v.end());
            std::vector<int> ui = invert_word(u), vi = invert_word(v);
            w.insert(w.end(), ui.begin(), ui.end());
            w.insert(w.end(), vi.begin(), vi.end());
            w = free_reduce(std::move(w));
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            w = {gen_ref() + 1};
        } else {
            fail("expected word");
        }
        if (peek() == '^') {
            get();
            w = repeat(w, integer());
        }
        return w;
    }

    std::vector<int> word() {
        std::vector<int> w = atom();
        while (starts_atom(peek())) {
            std::vector<int> next = atom();
            w.insert(w.end(), next.begin(), next.end());
        }
        return free_reduce(std::move(w));
    }

    // w1 = w2 = ... ; each adjacent pair contributes w_i * w_{i+1}^-1.
    void relator_chain(Presentation& p) {
        std::vector<std::vector<int>> sides;
        sides.push_back(word());
        while (peek() == '=') {
            get();
            sides.push_back(word());
        }
        auto add = [&](std::vector<int> r) {
            r = free_reduce(std::move(r));
            if (r.empty()) fail("relator reduces to the empty word");
            p.relators.push_back(std::move(r));
        };
        if (sides.size() == 1) {
            add(std::move(sides[0]));
            return;
        }
        for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
            std::vector<int> r = sides[i];
            std::vector<int> rhs = invert_word(sides[i + 1]);
            r.insert(r.end(), rhs.begin(), rhs.end());
            add(std::move(r));
        }
    }
};

}  // namespace

Presentation parse_presentation(const std::string& text) { return Parser(text).run(); }

}  // namespace cgroups
