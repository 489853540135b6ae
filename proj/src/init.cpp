#include "nss/init.hpp"

#include <random>

#include "nss/expr.hpp"
#include "nss/snapshot.hpp"
#include "nss/spectral.hpp"

namespace nss {

Field random_field(const GridSpec& grid, unsigned long long seed, double amplitude) {
    std::mt19937_64 rng(seed);
    Field f(grid);
    for (double& v : f.values) {
        const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
        v = amplitude * (2.0 * u01 - 1.0);
    }
    return f;
}

Field make_initial(const RunConfig& cfg) {
    const GridSpec grid = cfg.grid();
    switch (cfg.initial.kind) {
        case InitialKind::Random:
            return project_zero_mean(random_field(grid, cfg.seed, cfg.initial.amplitude));
        case InitialKind::Expression: {
            const Expression e = Expression::parse(cfg.initial.expression);
            Field f(grid);
            for (int i = 0; i < grid.points; ++i)
                for (int j = 0; j < grid.points; ++j)
                    f.at(i, j) = e.eval(grid.node_x(i), grid.node_y(j));
            if (!f.finite())
                throw ExpressionError("initial expression evaluates to NaN/Inf on the grid");
            return f;
        }
        case InitialKind::Snapshot: {
            Snapshot snap = read_snapshot(cfg.initial.path);
            if (snap.u.grid != grid)
                throw SnapshotFormatError("snapshot grid does not match config (M=" +
                                          std::to_string(snap.header.M) + ")");
            return snap.u;
        }
    }
    throw Error("unreachable initial kind");
}

}  // namespace nss
