#include "configcomplex/correspondence.hpp"

#include <algorithm>

#include "configcomplex/error.hpp"
#include "configcomplex/normal_form.hpp"

namespace configcomplex {

namespace {

std::string first_failure(const Report& r) { return r.failures.empty() ? "" : r.failures.front().detail; }

}  // namespace

LinearCode sidon_to_code(const SidonSet& b) {
    if (const Report r = validate_sidon(b); !r.ok()) throw InvalidInput("not a valid Sidon set: " + first_failure(r));
    if (b.elements.size() < 2) throw InvalidInput("Sidon set needs at least 2 elements for a code");
    const auto& g = b.group;
    const std::size_t k = b.elements.size() - 1;
    const std::size_t r = g.rank();

    // y in Z^k maps to sum_i y_i (b_{i-1} - b_k). Stack the images over the
    // relations d_j e_j of G and keep the first k coordinates of the left kernel.
    IntMatrix gens(0, k + 1);
    if (r == 0) {
        for (std::size_t i = 0; i < k; ++i) gens.append_row(LatticeVector::unit_difference(k, i, k).coords());
    } else {
        IntMatrix m(k + r, r);
        for (std::size_t i = 0; i < k; ++i) {
            const GroupElement img = g.sub(b.elements[i], b.elements[k]);
            for (std::size_t j = 0; j < r; ++j) m(i, j) = img[j];
        }
        for (std::size_t j = 0; j < r; ++j) m(k + j, j) = g.factors()[j];
        const IntMatrix ker = left_kernel(m);
        for (std::size_t row = 0; row < ker.rows(); ++row) {
            std::vector<std::int64_t> y(k);
            for (std::size_t i = 0; i < k; ++i) y[i] = ker(row, i);
            gens.append_row(LatticeVector::from_reduced(y).coords());
        }
    }
    const LinearCode code = LinearCode::from_generators(gens);
    if (code.index() != g.order())
        throw InternalError("Sidon code has index " + std::to_string(code.index()) + ", expected " +
                            std::to_string(g.order()));
    if (!code_is_radius1(code)) throw InternalError("Sidon code does not have radius 1");
    return code;
}

SidonSet code_to_sidon(const LinearCode& l) {
    if (!code_is_radius1(l)) throw InvalidInput("code does not have radius 1");
    const QuotientMap q = l.quotient();
    const std::size_t k = l.k();
    SidonSet b{q.group(), {}};
    for (std::size_t i = 0; i <= k; ++i) b.elements.push_back(q.project(LatticeVector::unit_difference(k, i, 0).coords()));
    if (const Report r = validate_sidon(b); !r.ok())
        throw InternalError("code gives an invalid Sidon set: " + first_failure(r));
    return b;
}

ColoredConfiguration code_to_config(const LinearCode& l) {
    if (!code_is_radius1(l)) throw InvalidInput("code does not have radius 1");
    const QuotientMap q = l.quotient();
    const auto& g = q.group();
    const std::size_t k = l.k();
    std::vector<GroupElement> steps;
    for (std::size_t i = 0; i <= k; ++i) steps.push_back(q.project(LatticeVector::unit_difference(k, i, k).coords()));

    std::vector<std::string> names;
    const auto elems = g.elements();
    for (const auto& e : elems) names.push_back(g.element_name(e));
    std::vector<Incidence> incidences;
    for (std::size_t p = 0; p < elems.size(); ++p)
        for (std::size_t i = 0; i <= k; ++i)
            incidences.push_back({static_cast<int>(p), static_cast<int>(g.index_of(g.sub(elems[p], steps[i]))),
                                  static_cast<int>(i) + 1});
    ColoredConfiguration c(static_cast<int>(k) + 1, names, names, std::move(incidences));
    if (const Report r = validate_colored_configuration(c); !r.ok())
        throw InternalError("code configuration is invalid: " + first_failure(r));
    return c;
}

LinearCode config_to_code(const ColoredConfiguration& c) {
    if (const Report r = validate_colored_configuration(c); !r.ok())
        throw InvalidInput("not a colored configuration: " + first_failure(r));
    return stabilizer_code(LatticeAction::build(c));
}

RoundTrip roundtrip_config(const ColoredConfiguration& c) {
    RoundTrip out{Report{}, config_to_code(c), std::nullopt, false};
    const ColoredConfiguration image = code_to_config(out.code);
    out.isomorphism = is_isomorphic(c, image);
    if (!out.isomorphism) {
        out.report.fail("isomorphism", "configuration is not isomorphic to its round trip");
        return out;
    }
    if (!is_isomorphism(c, image, *out.isomorphism))
        throw InternalError("isomorphism search returned an invalid map");
    out.identity_colors = out.isomorphism->identity_colors();
    out.report.note(out.identity_colors ? "isomorphic (identity color map)" : "isomorphic (permuted colors)");
    return out;
}

DifferenceSet recover_difference_set(const ColoredConfiguration& c) {
    if (const Report r = validate_colored_configuration(c); !r.ok())
        throw InvalidInput("not a colored configuration: " + first_failure(r));
    if (!is_projective_plane(c)) throw InvalidInput("not a projective plane");
    const SidonSet b = code_to_sidon(config_to_code(c));
    DifferenceSet d{b.group, b.elements};
    if (const Report r = validate_difference_set(d); !r.ok())
        throw InternalError("recovered set is not planar: " + first_failure(r));
    if (!is_isomorphic(c, config_from_difference_set(d).config))
        throw InternalError("recovered difference set gives a different plane");
    return d;
}

}  // namespace configcomplex
