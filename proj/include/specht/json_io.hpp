#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "specht/matrix.hpp"
#include "specht/partition.hpp"
#include "specht/perm.hpp"
#include "specht/tableau.hpp"

namespace specht {

using Json = nlohmann::ordered_json;

inline Json partition_json(const Partition& p) { return Json(p.parts()); }

// Row lists of entry lists.
inline Json tableau_json(const Tableau& t) { return Json(t.rows()); }

inline Json perm_json(const Perm& p) {
    Json j;
    j["cycles"] = p.cycle_string();
    j["images"] = p.images();
    return j;
}

template <class Ring>
Json matrix_json(const Ring& ring, const Matrix<Ring>& m) {
    Json j;
    j["ring"] = ring.descriptor();
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json entries = Json::array();
    for (const auto& x : m.data) entries.push_back(ring.to_string(x));
    j["entries"] = entries; // row-major
    return j;
}

// Dense array in the matrix-market idiom: a size line followed by one entry
// per line in column-major order. The ring goes into a comment.
template <class Ring>
void write_matrix_market(std::ostream& out, const Ring& ring, const Matrix<Ring>& m) {
    out << "%%MatrixMarket matrix array integer general\n";
    out << "% ring: " << ring.descriptor() << "\n";
    out << m.rows << " " << m.cols << "\n";
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) out << ring.to_string(m.at(i, j)) << "\n";
}

} // namespace specht
