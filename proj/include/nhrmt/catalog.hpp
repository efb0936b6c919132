#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "quaternion.hpp"
#include "symmetry.hpp"

namespace nhrmt {

enum class BlockOp { Id, T, C, A, Q };

// One block-level condition of a table form on a grid x grid block partition.
struct BlockRelation {
    enum class Type { Zero, Linear, QuaternionReal } type = Type::Zero;
    int r = 0, c = 0;
    cd coef{1.0};
    BlockOp op = BlockOp::Id;
    int r2 = 0, c2 = 0;

    std::string describe() const
    {
        auto at = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
        switch (type) {
        case Type::Zero: return "block" + at(r, c) + " = 0";
        case Type::QuaternionReal:
            return "block" + at(r, c) + (coef == cd{1.0} ? "" : " / i") + " quaternion real";
        case Type::Linear: break;
        }
        static const char* ops[] = {"", "^T", "*", "^dagger", "-bar"};
        const std::string k = coef.imag() != 0.0 ? "i" : (coef.real() < 0 ? "-" : "+");
        return "block" + at(r, c) + " = " + k + "block" + at(r2, c2) + ops[static_cast<int>(op)];
    }
};

struct StructurePredicate {
    int grid = 1;
    std::vector<BlockRelation> relations;
    // parameter count = quad * h^2 + lin * h at half-size h
    long quad = 0, lin = 0;
    // the form describes i times the subspace
    bool times_i = false;

    std::size_t param_count(std::size_t h) const
    {
        const long hh = static_cast<long>(h);
        return static_cast<std::size_t>(quad * hh * hh + lin * hh);
    }
};

inline ComplexMatrix apply_block_op(BlockOp op, const ComplexMatrix& x)
{
    switch (op) {
    case BlockOp::Id: return x;
    case BlockOp::T: return transpose(x);
    case BlockOp::C: return conjugate(x);
    case BlockOp::A: return adjoint(x);
    case BlockOp::Q: return matrix_dual(x);
    }
    return x;
}

// Empty when h satisfies every relation, otherwise the first violated one.
inline std::optional<std::string> check_form(const StructurePredicate& p, const ComplexMatrix& h, double tol = 1e-10)
{
    const std::size_t b = h.rows() / static_cast<std::size_t>(p.grid);
    auto blk = [&](int r, int c) { return block(h, r * b, c * b, b, b); };
    for (const auto& rel : p.relations) {
        switch (rel.type) {
        case BlockRelation::Type::Zero:
            if (max_abs(blk(rel.r, rel.c)) > tol)
                return rel.describe();
            break;
        case BlockRelation::Type::Linear:
            if (max_abs_diff(blk(rel.r, rel.c), rel.coef * apply_block_op(rel.op, blk(rel.r2, rel.c2))) > tol)
                return rel.describe();
            break;
        case BlockRelation::Type::QuaternionReal: {
            const ComplexMatrix x = (1.0 / rel.coef) * blk(rel.r, rel.c);
            if (max_abs(x) > 0.0 && !is_quaternion_real((1.0 / max_abs(x)) * x, tol))
                return rel.describe();
            break;
        }
        }
    }
    return std::nullopt;
}

struct OpForm {
    char kind;
    std::string form;
    int epsilon;
};

struct CatalogEntry {
    std::string id;
    // N = unit * half-size
    std::size_t unit = 2;
    std::vector<OpForm> ops;
    StructurePredicate p_form, k_form;
    std::optional<std::string> expected_class;
    std::vector<std::string> flags;

    std::string row() const
    {
        std::size_t k = 0;
        while (k < id.size() && std::isdigit(static_cast<unsigned char>(id[k])))
            ++k;
        return id.substr(0, k);
    }
    // 19', 19+-, 19'+-, 21a+-, 21b+-
    bool equivalent_form() const
    {
        if (id.find('\'') != std::string::npos)
            return true;
        return id.find('/') == std::string::npos && (row() == "19" || row() == "21");
    }
    std::string kinds() const
    {
        std::string s;
        for (char k : std::string("PQCK"))
            for (const auto& op : ops)
                if (op.kind == k)
                    s += k;
        return s;
    }

    EnsembleSpec build(std::size_t half_size) const
    {
        if (half_size == 0)
            throw ContractViolation("half-size must be at least 1");
        const std::size_t n = unit * half_size;
        std::vector<SymmetryOp> out;
        for (const auto& op : ops)
            out.push_back({kind_from_char(op.kind), named_form(op.form, n), op.epsilon});
        return EnsembleSpec(n, std::move(out));
    }
};

namespace detail {

enum Zeros { offdiag_only, diag_only };

inline BlockRelation Z(int r, int c) { return {BlockRelation::Type::Zero, r, c}; }
inline BlockRelation QR(int r, int c, cd phase = 1.0) { return {BlockRelation::Type::QuaternionReal, r, c, phase}; }
inline BlockRelation R(int r, int c, cd coef, BlockOp op) { return {BlockRelation::Type::Linear, r, c, coef, op, r, c}; }
inline BlockRelation R(int r, int c, cd coef, BlockOp op, int r2, int c2)
{
    return {BlockRelation::Type::Linear, r, c, coef, op, r2, c2};
}

inline StructurePredicate form(int grid, std::vector<BlockRelation> rels, long quad, long lin)
{
    return {grid, std::move(rels), quad, lin};
}

// offdiag_only: the diagonal half-blocks vanish; diag_only: the off-diagonal ones do.
inline StructurePredicate form(int grid, Zeros z, std::vector<BlockRelation> rels, long quad, long lin)
{
    std::vector<BlockRelation> all;
    const int h = grid / 2;
    for (int r = 0; r < grid; ++r)
        for (int c = 0; c < grid; ++c) {
            const bool same_half = (r < h) == (c < h);
            if (same_half == (z == offdiag_only))
                all.push_back(Z(r, c));
        }
    all.insert(all.end(), rels.begin(), rels.end());
    return {grid, std::move(all), quad, lin};
}

inline std::vector<CatalogEntry> build_catalog()
{
    using enum BlockOp;
    std::vector<CatalogEntry> v;
    auto add = [&](std::string id, std::size_t unit, std::vector<OpForm> ops, StructurePredicate p,
                   StructurePredicate k, std::optional<std::string> cls, bool p_times_i = false) {
        p.times_i = p_times_i;
        CatalogEntry e{std::move(id), unit, std::move(ops), std::move(p), std::move(k), std::move(cls), {}};
        if (e.row() == "29" || e.row() == "30")
            e.flags.push_back("unverified-against-prior-work");
        v.push_back(std::move(e));
    };
    add("1", 2, {},
        form(1, {}, 8, 0),
        form(1, {}, 8, 0),
        "Gin2");
    add("2", 2, {{'P', "diag_pm", 1}},
        form(2, offdiag_only, {}, 4, 0),
        form(2, diag_only, {}, 4, 0),
        {});
    add("3/+", 2, {{'C', "identity", 1}},
        form(1, {R(0, 0, 1, T)}, 4, 2),
        form(1, {R(0, 0, -1, T)}, 4, -2),
        {});
    add("3/-", 2, {{'C', "identity", -1}},
        form(1, {R(0, 0, -1, T)}, 4, -2),
        form(1, {R(0, 0, -1, T)}, 4, -2),
        {});
    add("4/+", 2, {{'C', "offdiag_antisym", 1}},
        form(2, {R(1, 1, 1, T, 0, 0), R(0, 1, -1, T), R(1, 0, -1, T)}, 4, -2),
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 1, 1, T), R(1, 0, 1, T)}, 4, 2),
        {});
    add("4/-", 2, {{'C', "offdiag_antisym", -1}},
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 1, 1, T), R(1, 0, 1, T)}, 4, 2),
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 1, 1, T), R(1, 0, 1, T)}, 4, 2),
        {});
    add("5", 2, {{'Q', "identity", 1}},
        form(1, {R(0, 0, 1, A)}, 4, 0),
        form(1, {R(0, 0, -1, A)}, 4, 0),
        "A");
    add("6", 2, {{'Q', "diag_pm", 1}},
        form(2, {R(0, 0, 1, A), R(1, 1, 1, A), R(1, 0, -1, A, 0, 1)}, 4, 0),
        form(2, {R(0, 0, -1, A), R(1, 1, -1, A), R(1, 0, 1, A, 0, 1)}, 4, 0),
        {});
    add("7", 2, {{'K', "identity", 1}},
        form(1, {R(0, 0, 1, C)}, 4, 0),
        form(1, {R(0, 0, 1, C)}, 4, 0),
        "Gin1");
    add("8", 2, {{'K', "e1_blocks", 1}},
        form(1, {QR(0, 0)}, 4, 0),
        form(1, {QR(0, 0)}, 4, 0),
        "Gin4");
    add("9/+", 2, {{'P', "diag_pm", 1}, {'C', "identity", 1}},
        form(2, offdiag_only, {R(1, 0, 1, T, 0, 1)}, 2, 0),
        form(2, diag_only, {R(0, 0, -1, T), R(1, 1, -1, T)}, 2, -2),
        {});
    add("9/-", 2, {{'P', "diag_pm", 1}, {'C', "identity", -1}},
        form(2, offdiag_only, {R(1, 0, -1, T, 0, 1)}, 2, 0),
        form(2, diag_only, {R(0, 0, -1, T), R(1, 1, -1, T)}, 2, -2),
        {});
    add("10/+", 4, {{'P', "diag_pm", 1}, {'C', "offdiag_antisym_nested", 1}},
        form(4, offdiag_only, {R(2, 0, 1, T, 1, 3), R(2, 1, -1, T, 0, 3), R(3, 0, -1, T, 1, 2), R(3, 1, 1, T, 0, 2)}, 8, 0),
        form(4, diag_only, {R(1, 1, -1, T, 0, 0), R(0, 1, 1, T), R(1, 0, 1, T), R(3, 3, -1, T, 2, 2), R(2, 3, 1, T), R(3, 2, 1, T)}, 8, 4),
        {});
    add("10/-", 4, {{'P', "diag_pm", 1}, {'C', "offdiag_antisym_nested", -1}},
        form(4, offdiag_only, {R(2, 0, -1, T, 1, 3), R(2, 1, 1, T, 0, 3), R(3, 0, 1, T, 1, 2), R(3, 1, -1, T, 0, 2)}, 8, 0),
        form(4, diag_only, {R(1, 1, -1, T, 0, 0), R(0, 1, 1, T), R(1, 0, 1, T), R(3, 3, -1, T, 2, 2), R(2, 3, 1, T), R(3, 2, 1, T)}, 8, 4),
        {});
    add("11/+", 2, {{'P', "diag_pm", 1}, {'C', "offdiag_sym", 1}},
        form(2, offdiag_only, {R(0, 1, 1, T), R(1, 0, 1, T)}, 2, 2),
        form(2, diag_only, {R(1, 1, -1, T, 0, 0)}, 2, 0),
        {});
    add("11/-", 2, {{'P', "diag_pm", 1}, {'C', "offdiag_sym", -1}},
        form(2, offdiag_only, {R(0, 1, -1, T), R(1, 0, -1, T)}, 2, -2),
        form(2, diag_only, {R(1, 1, -1, T, 0, 0)}, 2, 0),
        {});
    add("12/+", 2, {{'P', "diag_pm", 1}, {'Q', "identity", 1}},
        form(2, offdiag_only, {R(1, 0, 1, A, 0, 1)}, 2, 0),
        form(2, diag_only, {R(0, 0, -1, A), R(1, 1, -1, A)}, 2, 0),
        "AIII");
    add("12/-", 2, {{'P', "diag_pm", 1}, {'Q', "diag_pm", 1}},
        form(2, offdiag_only, {R(1, 0, -1, A, 0, 1)}, 2, 0),
        form(2, diag_only, {R(0, 0, -1, A), R(1, 1, -1, A)}, 2, 0),
        {});
    add("13", 2, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}},
        form(2, offdiag_only, {R(0, 1, 1, A), R(1, 0, 1, A)}, 2, 0),
        form(2, diag_only, {R(1, 1, -1, A, 0, 0)}, 2, 0),
        {});
    add("14/+", 2, {{'P', "diag_pm", 1}, {'K', "identity", 1}},
        form(2, offdiag_only, {R(0, 1, 1, C), R(1, 0, 1, C)}, 2, 0),
        form(2, diag_only, {R(0, 0, 1, C), R(1, 1, 1, C)}, 2, 0),
        {});
    add("14/-", 2, {{'P', "diag_pm", 1}, {'K', "diag_pm", 1}},
        form(2, offdiag_only, {R(0, 1, -1, C), R(1, 0, -1, C)}, 2, 0),
        form(2, diag_only, {R(0, 0, 1, C), R(1, 1, 1, C)}, 2, 0),
        {});
    add("15", 4, {{'P', "diag_pm", 1}, {'K', "e1_blocks", 1}},
        form(2, offdiag_only, {QR(0, 1), QR(1, 0)}, 8, 0),
        form(2, diag_only, {QR(0, 0), QR(1, 1)}, 8, 0),
        {});
    add("16/+", 2, {{'P', "diag_pm", 1}, {'K', "offdiag_sym", 1}},
        form(2, offdiag_only, {R(1, 0, 1, C, 0, 1)}, 2, 0),
        form(2, diag_only, {R(1, 1, 1, C, 0, 0)}, 2, 0),
        {});
    add("16/-", 2, {{'P', "diag_pm", 1}, {'K', "offdiag_antisym", 1}},
        form(2, offdiag_only, {R(1, 0, -1, C, 0, 1)}, 2, 0),
        form(2, diag_only, {R(1, 1, 1, C, 0, 0)}, 2, 0),
        {});
    add("17/+", 2, {{'Q', "identity", 1}, {'C', "identity", 1}},
        form(1, {R(0, 0, 1, C), R(0, 0, 1, T)}, 2, 1),
        form(1, {R(0, 0, 1, C), R(0, 0, -1, T)}, 2, -1),
        "AI");
    add("17/-", 2, {{'Q', "identity", 1}, {'C', "identity", -1}},
        form(1, {R(0, 0, -1, C), R(0, 0, -1, T)}, 2, -1),
        form(1, {R(0, 0, 1, C), R(0, 0, -1, T)}, 2, -1),
        "D");
    add("18a", 2, {{'Q', "identity", 1}, {'C', "e1_blocks", 1}},
        form(1, {QR(0, 0), R(0, 0, 1, Q)}, 2, -1),
        form(1, {QR(0, 0), R(0, 0, -1, Q)}, 2, 1),
        "AII");
    add("18b/+", 2, {{'Q', "identity", 1}, {'C', "offdiag_sym", -1}},
        form(2, {R(0, 0, 1, A), R(0, 1, -1, T), R(1, 0, -1, C, 0, 1), R(1, 1, -1, C, 0, 0)}, 2, -1),
        form(2, {R(0, 0, -1, A), R(0, 1, -1, T), R(1, 0, -1, A, 0, 1), R(1, 1, -1, T, 0, 0)}, 2, -1),
        "D");
    add("18b/-", 2, {{'Q', "identity", 1}, {'C', "offdiag_antisym", -1}},
        form(2, {R(0, 0, 1, A), R(0, 1, 1, T), R(1, 0, 1, C, 0, 1), R(1, 1, -1, C, 0, 0)}, 2, 1),
        form(2, {R(0, 0, -1, A), R(0, 1, 1, T), R(1, 0, -1, A, 0, 1), R(1, 1, -1, T, 0, 0)}, 2, 1),
        "C");
    add("19/+", 2, {{'Q', "diag_pm", 1}, {'C', "identity", 1}},
        form(2, {R(1, 0, 1, T, 0, 1), R(0, 0, 1, C), R(0, 0, 1, T), R(0, 1, -1, C), R(1, 1, 1, C), R(1, 1, 1, T)}, 2, 1),
        form(2, {R(1, 0, 1, A, 0, 1), R(0, 0, 1, C), R(0, 0, -1, T), R(0, 1, -1, C), R(1, 1, 1, C), R(1, 1, -1, T)}, 2, -1),
        {});
    add("19'/+", 2, {{'Q', "diag_pm", 1}, {'C', "diag_pm", 1}},
        form(2, {R(1, 0, -1, T, 0, 1), R(0, 0, 1, C), R(0, 0, 1, T), R(0, 1, 1, C), R(1, 1, 1, C), R(1, 1, 1, T)}, 2, 1),
        form(2, {R(1, 0, 1, A, 0, 1), R(0, 0, 1, C), R(0, 0, -1, T), R(0, 1, 1, C), R(1, 1, 1, C), R(1, 1, -1, T)}, 2, -1),
        {});
    add("19/-", 2, {{'Q', "diag_pm", 1}, {'C', "identity", -1}},
        form(2, {R(1, 0, -1, T, 0, 1), R(0, 0, -1, C), R(0, 0, -1, T), R(0, 1, 1, C), R(1, 1, -1, C), R(1, 1, -1, T)}, 2, -1),
        form(2, {R(1, 0, 1, A, 0, 1), R(0, 0, 1, C), R(0, 0, -1, T), R(0, 1, -1, C), R(1, 1, 1, C), R(1, 1, -1, T)}, 2, -1),
        {});
    add("19'/-", 2, {{'Q', "diag_pm", 1}, {'C', "diag_pm", -1}},
        form(2, {R(1, 0, 1, T, 0, 1), R(0, 0, -1, C), R(0, 0, -1, T), R(0, 1, -1, C), R(1, 1, -1, C), R(1, 1, -1, T)}, 2, -1),
        form(2, {R(1, 0, 1, A, 0, 1), R(0, 0, 1, C), R(0, 0, -1, T), R(0, 1, 1, C), R(1, 1, 1, C), R(1, 1, -1, T)}, 2, -1),
        {});
    add("19+", 2, {{'Q', "offdiag_sym", 1}, {'C', "identity", 1}},
        form(2, {R(1, 0, 1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(0, 0, 1, T), R(0, 1, 1, A)}, 2, 1),
        form(2, {R(1, 0, 1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(0, 0, -1, T), R(0, 1, -1, A)}, 2, -1),
        {});
    add("19-", 2, {{'Q', "offdiag_sym", 1}, {'C', "identity", -1}},
        form(2, {R(1, 0, -1, C, 0, 1), R(1, 1, -1, C, 0, 0), R(0, 0, -1, T), R(0, 1, 1, A)}, 2, -1),
        form(2, {R(1, 0, 1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(0, 0, -1, T), R(0, 1, -1, A)}, 2, -1),
        {});
    add("19'+", 2, {{'Q', "offdiag_sym", 1}, {'C', "offdiag_sym", 1}},
        form(2, {R(1, 1, 1, T, 0, 0), R(0, 0, 1, C), R(0, 1, 1, C), R(0, 1, 1, T), R(1, 0, 1, C), R(1, 0, 1, T)}, 2, 1),
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 0, 1, C), R(0, 1, 1, C), R(0, 1, -1, T), R(1, 0, 1, C), R(1, 0, -1, T)}, 2, -1),
        {});
    add("19'-", 2, {{'Q', "offdiag_sym", 1}, {'C', "offdiag_sym", -1}},
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 0, -1, C), R(0, 1, -1, C), R(0, 1, -1, T), R(1, 0, -1, C), R(1, 0, -1, T)}, 2, -1),
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 0, 1, C), R(0, 1, 1, C), R(0, 1, -1, T), R(1, 0, 1, C), R(1, 0, -1, T)}, 2, -1),
        {});
    add("20a", 4, {{'Q', "diag_pm", 1}, {'C', "e1_blocks", 1}},
        form(2, {QR(0, 0), R(0, 0, 1, Q), QR(1, 1), R(1, 1, 1, Q), QR(0, 1, I_unit), R(1, 0, 1, Q, 0, 1)}, 8, -2),
        form(2, {QR(0, 0), R(0, 0, -1, Q), QR(1, 1), R(1, 1, -1, Q), QR(0, 1, I_unit), R(1, 0, -1, Q, 0, 1)}, 8, 2),
        {});
    add("20b", 4, {{'Q', "diag_pm", 1}, {'C', "e1_blocks", -1}},
        form(2, {QR(0, 0, I_unit), R(0, 0, -1, Q), QR(1, 1, I_unit), R(1, 1, -1, Q), QR(0, 1), R(1, 0, -1, Q, 0, 1)}, 8, 2),
        form(2, {QR(0, 0), R(0, 0, -1, Q), QR(1, 1), R(1, 1, -1, Q), QR(0, 1, I_unit), R(1, 0, -1, Q, 0, 1)}, 8, 2),
        {});
    add("21a/+", 2, {{'Q', "diag_pm", 1}, {'C', "offdiag_sym", 1}},
        form(2, {R(0, 0, 1, A), R(1, 1, 1, C, 0, 0), R(0, 1, 1, T), R(1, 0, -1, C, 0, 1)}, 2, 1),
        form(2, {R(0, 0, -1, A), R(1, 1, 1, C, 0, 0), R(0, 1, -1, T), R(1, 0, -1, C, 0, 1)}, 2, -1),
        {});
    add("21b/+", 2, {{'Q', "diag_pm", 1}, {'C', "offdiag_sym", -1}},
        form(2, {R(0, 0, 1, A), R(1, 1, -1, C, 0, 0), R(0, 1, -1, T), R(1, 0, 1, C, 0, 1)}, 2, -1),
        form(2, {R(0, 0, -1, A), R(1, 1, 1, C, 0, 0), R(0, 1, -1, T), R(1, 0, -1, C, 0, 1)}, 2, -1),
        {});
    add("21a/-", 2, {{'Q', "diag_pm", 1}, {'C', "offdiag_antisym", 1}},
        form(2, {R(0, 0, 1, A), R(1, 1, 1, C, 0, 0), R(0, 1, -1, T), R(1, 0, 1, C, 0, 1)}, 2, -1),
        form(2, {R(0, 0, -1, A), R(1, 1, 1, C, 0, 0), R(0, 1, 1, T), R(1, 0, 1, C, 0, 1)}, 2, 1),
        {});
    add("21b/-", 2, {{'Q', "diag_pm", 1}, {'C', "offdiag_antisym", -1}},
        form(2, {R(0, 0, 1, A), R(1, 1, -1, C, 0, 0), R(0, 1, 1, T), R(1, 0, -1, C, 0, 1)}, 2, 1),
        form(2, {R(0, 0, -1, A), R(1, 1, 1, C, 0, 0), R(0, 1, 1, T), R(1, 0, 1, C, 0, 1)}, 2, 1),
        {});
    add("21a+", 2, {{'Q', "offdiag_sym", 1}, {'C', "diag_pm", 1}},
        form(2, {R(0, 0, 1, T), R(0, 1, 1, A), R(1, 0, -1, C, 0, 1), R(1, 1, 1, C, 0, 0)}, 2, 1),
        form(2, {R(0, 0, -1, T), R(0, 1, -1, A), R(1, 0, -1, C, 0, 1), R(1, 1, 1, C, 0, 0)}, 2, -1),
        {});
    add("21b+", 2, {{'Q', "offdiag_sym", 1}, {'C', "diag_pm", -1}},
        form(2, {R(0, 0, -1, T), R(0, 1, 1, A), R(1, 0, 1, C, 0, 1), R(1, 1, -1, C, 0, 0)}, 2, -1),
        form(2, {R(0, 0, -1, T), R(0, 1, -1, A), R(1, 0, -1, C, 0, 1), R(1, 1, 1, C, 0, 0)}, 2, -1),
        {});
    add("21a-", 2, {{'Q', "offdiag_sym", 1}, {'C', "offdiag_antisym", 1}},
        form(2, {R(1, 1, 1, T, 0, 0), R(0, 0, 1, C), R(0, 1, -1, C), R(0, 1, -1, T), R(1, 0, -1, C), R(1, 0, -1, T)}, 2, -1),
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 0, 1, C), R(0, 1, -1, C), R(0, 1, 1, T), R(1, 0, -1, C), R(1, 0, 1, T)}, 2, 1),
        {});
    add("21b-", 2, {{'Q', "offdiag_sym", 1}, {'C', "offdiag_antisym", -1}},
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 0, -1, C), R(0, 1, 1, C), R(0, 1, 1, T), R(1, 0, 1, C), R(1, 0, 1, T)}, 2, 1),
        form(2, {R(1, 1, -1, T, 0, 0), R(0, 0, 1, C), R(0, 1, -1, C), R(0, 1, 1, T), R(1, 0, -1, C), R(1, 0, 1, T)}, 2, 1),
        {});
    add("22/+", 2, {{'P', "diag_pm", 1}, {'Q', "identity", 1}, {'C', "identity", 1}},
        form(2, offdiag_only, {R(1, 0, 1, T, 0, 1), R(0, 1, 1, C)}, 1, 0),
        form(2, diag_only, {R(0, 0, 1, C), R(0, 0, -1, T), R(1, 1, 1, C), R(1, 1, -1, T)}, 1, -1),
        "BDI");
    add("22/-", 2, {{'P', "diag_pm", 1}, {'Q', "identity", 1}, {'C', "identity", -1}},
        form(2, offdiag_only, {R(1, 0, -1, T, 0, 1), R(0, 1, -1, C)}, 1, 0),
        form(2, diag_only, {R(0, 0, 1, C), R(0, 0, -1, T), R(1, 1, 1, C), R(1, 1, -1, T)}, 1, -1),
        "BDI");
    add("23/+", 4, {{'P', "diag_pm", 1}, {'Q', "identity", 1}, {'C', "e1_blocks", 1}},
        form(2, offdiag_only, {QR(0, 1), R(1, 0, 1, Q, 0, 1)}, 4, 0),
        form(2, diag_only, {QR(0, 0), R(0, 0, -1, Q), QR(1, 1), R(1, 1, -1, Q)}, 4, 2),
        "CII");
    add("23/-", 4, {{'P', "diag_pm", 1}, {'Q', "identity", 1}, {'C', "e1_blocks", -1}},
        form(2, offdiag_only, {QR(0, 1), R(1, 0, -1, Q, 0, 1)}, 4, 0),
        form(2, diag_only, {QR(0, 0), R(0, 0, -1, Q), QR(1, 1), R(1, 1, -1, Q)}, 4, 2),
        {}, true);
    add("24/+", 2, {{'P', "diag_pm", 1}, {'Q', "identity", 1}, {'C', "offdiag_sym", 1}},
        form(2, offdiag_only, {R(1, 0, 1, C, 0, 1), R(0, 1, 1, T)}, 1, 1),
        form(2, diag_only, {R(0, 0, -1, A), R(1, 1, 1, C, 0, 0)}, 1, 0),
        "CI");
    add("24/-", 2, {{'P', "diag_pm", 1}, {'Q', "identity", 1}, {'C', "offdiag_sym", -1}},
        form(2, offdiag_only, {R(1, 0, -1, C, 0, 1), R(0, 1, -1, T)}, 1, -1),
        form(2, diag_only, {R(0, 0, -1, A), R(1, 1, 1, C, 0, 0)}, 1, 0),
        "DIII");
    add("25/+", 2, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "identity", 1}},
        form(2, offdiag_only, {R(1, 0, 1, C, 0, 1), R(0, 1, 1, A)}, 1, 0),
        form(2, diag_only, {R(0, 0, -1, T), R(1, 1, 1, C, 0, 0)}, 1, -1),
        {});
    add("25/-", 2, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "identity", -1}},
        form(2, offdiag_only, {R(1, 0, -1, C, 0, 1), R(0, 1, 1, A)}, 1, 0),
        form(2, diag_only, {R(0, 0, -1, T), R(1, 1, 1, C, 0, 0)}, 1, -1),
        {});
    add("26/+", 4, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "offdiag_antisym_nested", 1}},
        form(4, offdiag_only, {R(0, 2, 1, A), R(1, 3, 1, A), R(1, 2, 1, A, 0, 3), R(2, 0, 1, T, 1, 3), R(2, 1, -1, T, 0, 3), R(3, 0, -1, C, 0, 3), R(3, 1, 1, T, 0, 2)}, 4, 0),
        form(4, diag_only, {R(1, 1, -1, T, 0, 0), R(0, 1, 1, T), R(1, 0, 1, T), R(2, 2, -1, A, 0, 0), R(2, 3, -1, A, 1, 0), R(3, 2, -1, A, 0, 1), R(3, 3, 1, C, 0, 0)}, 4, 2),
        {});
    add("26/-", 4, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "offdiag_antisym_nested", -1}},
        form(4, offdiag_only, {R(0, 2, 1, A), R(1, 3, 1, A), R(1, 2, 1, A, 0, 3), R(2, 0, -1, T, 1, 3), R(2, 1, 1, T, 0, 3), R(3, 0, 1, C, 0, 3), R(3, 1, -1, T, 0, 2)}, 4, 0),
        form(4, diag_only, {R(1, 1, -1, T, 0, 0), R(0, 1, 1, T), R(1, 0, 1, T), R(2, 2, -1, A, 0, 0), R(2, 3, -1, A, 1, 0), R(3, 2, -1, A, 0, 1), R(3, 3, 1, C, 0, 0)}, 4, 2),
        {});
    add("27/+", 2, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "offdiag_sym", 1}},
        form(2, offdiag_only, {R(0, 1, 1, C), R(0, 1, 1, T), R(1, 0, 1, C), R(1, 0, 1, T)}, 1, 1),
        form(2, diag_only, {R(0, 0, 1, C), R(1, 1, -1, T, 0, 0)}, 1, 0),
        {});
    add("27/-", 2, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "offdiag_sym", -1}},
        form(2, offdiag_only, {R(0, 1, 1, C), R(0, 1, -1, T), R(1, 0, 1, C), R(1, 0, -1, T)}, 1, -1),
        form(2, diag_only, {R(0, 0, 1, C), R(1, 1, -1, T, 0, 0)}, 1, 0),
        {}, true);
    add("28/+", 4, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "cross_antisym", 1}},
        form(4, offdiag_only, {R(0, 2, 1, A), R(0, 3, -1, T), R(1, 2, -1, C, 0, 3), R(1, 3, 1, C, 0, 2), R(2, 0, 1, A), R(2, 1, -1, T), R(3, 0, -1, C, 2, 1), R(3, 1, 1, C, 2, 0)}, 4, -2),
        form(4, diag_only, {R(1, 0, -1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(2, 2, -1, A, 0, 0), R(2, 3, -1, A, 1, 0), R(3, 2, -1, A, 0, 1), R(3, 3, -1, A, 1, 1)}, 4, 0),
        {});
    add("28/-", 4, {{'P', "diag_pm", 1}, {'Q', "offdiag_sym", 1}, {'C', "cross_antisym", -1}},
        form(4, offdiag_only, {R(0, 2, 1, A), R(0, 3, 1, T), R(1, 2, 1, C, 0, 3), R(1, 3, -1, C, 0, 2), R(2, 0, 1, A), R(2, 1, 1, T), R(3, 0, 1, C, 2, 1), R(3, 1, -1, C, 2, 0)}, 4, 2),
        form(4, diag_only, {R(1, 0, -1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(2, 2, -1, A, 0, 0), R(2, 3, -1, A, 1, 0), R(3, 2, -1, A, 0, 1), R(3, 3, -1, A, 1, 1)}, 4, 0),
        {});
    add("29/+", 4, {{'P', "diag_pm", 1}, {'Q', "diag_pm_nested", 1}, {'C', "offdiag_sym_nested", 1}},
        form(4, offdiag_only, {R(1, 2, -1, C, 0, 3), R(1, 3, 1, C, 0, 2), R(2, 0, 1, A, 0, 2), R(2, 1, 1, T, 0, 3), R(3, 0, -1, A, 0, 3), R(3, 1, 1, T, 0, 2)}, 4, 0),
        form(4, diag_only, {R(0, 0, -1, A), R(0, 1, -1, T), R(1, 0, -1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(2, 2, -1, A), R(2, 3, -1, T), R(3, 2, -1, C, 2, 3), R(3, 3, 1, C, 2, 2)}, 4, -2),
        {});
    add("29/-", 4, {{'P', "diag_pm", 1}, {'Q', "diag_pm_nested", 1}, {'C', "offdiag_sym_nested", -1}},
        form(4, offdiag_only, {R(1, 2, 1, C, 0, 3), R(1, 3, -1, C, 0, 2), R(2, 0, 1, A, 0, 2), R(2, 1, -1, T, 0, 3), R(3, 0, -1, A, 0, 3), R(3, 1, -1, T, 0, 2)}, 4, 0),
        form(4, diag_only, {R(0, 0, -1, A), R(0, 1, -1, T), R(1, 0, -1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(2, 2, -1, A), R(2, 3, -1, T), R(3, 2, -1, C, 2, 3), R(3, 3, 1, C, 2, 2)}, 4, -2),
        {});
    add("30/+", 4, {{'P', "diag_pm", 1}, {'Q', "diag_pm_nested", 1}, {'C', "offdiag_antisym_nested", 1}},
        form(4, offdiag_only, {R(1, 2, 1, C, 0, 3), R(1, 3, 1, C, 0, 2), R(2, 0, 1, A, 0, 2), R(2, 1, -1, T, 0, 3), R(3, 0, -1, A, 0, 3), R(3, 1, 1, T, 0, 2)}, 4, 0),
        form(4, diag_only, {R(0, 0, -1, A), R(0, 1, 1, T), R(1, 0, 1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(2, 2, -1, A), R(2, 3, 1, T), R(3, 2, 1, C, 2, 3), R(3, 3, 1, C, 2, 2)}, 4, 2),
        {});
    add("30/-", 4, {{'P', "diag_pm", 1}, {'Q', "diag_pm_nested", 1}, {'C', "offdiag_antisym_nested", -1}},
        form(4, offdiag_only, {R(1, 2, -1, C, 0, 3), R(1, 3, -1, C, 0, 2), R(2, 0, 1, A, 0, 2), R(2, 1, 1, T, 0, 3), R(3, 0, -1, A, 0, 3), R(3, 1, -1, T, 0, 2)}, 4, 0),
        form(4, diag_only, {R(0, 0, -1, A), R(0, 1, 1, T), R(1, 0, 1, C, 0, 1), R(1, 1, 1, C, 0, 0), R(2, 2, -1, A), R(2, 3, 1, T), R(3, 2, 1, C, 2, 3), R(3, 3, 1, C, 2, 2)}, 4, 2),
        {});
    return v;
}

} // namespace detail

inline const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

// Exact id, or a bare row id such as "3" resolving to its upper sign "3/+".
inline const CatalogEntry& find_entry(const std::string& id)
{
    for (const auto& e : catalog())
        if (e.id == id)
            return e;
    for (const auto& e : catalog())
        if (e.id == id + "/+")
            return e;
    throw ContractViolation("unknown catalog entry '" + id + "'");
}

} // namespace nhrmt
