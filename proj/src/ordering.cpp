#include "bbs/ordering.hpp"

#include "bbs/qmatrix.hpp"

namespace bbs {

bool TermOrdering::full_column_rank(const std::vector<std::vector<long>>& rows, int n) {
    QMatrix m(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = Rational(rows[i][j]);
    return m.rank() == n;
}

} // namespace bbs
