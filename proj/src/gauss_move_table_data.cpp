// Baked Gauss-level move table, derived from the planar-diagram oracle
// (derive_gauss_move_table). Regenerated with tools/gen_move_table; the test
// suite checks this copy against a fresh derivation.

#include "weldknot/move_table.hpp"

namespace weldknot {

const GaussMoveTable& gauss_move_table() {
  static const GaussMoveTable table = [] {
    GaussMoveTable t;
    t.version = "gauss-move-table/v1 fp=7b4bb66fbf7cfa7";
    t.c1 = {
        "[H0 T0] +",
        "[H0 T0] -",
        "[T0 H0] +",
        "[T0 H0] -",
    };
    t.w = {
        "[T0 T1] ++",
        "[T0 T1] +-",
        "[T0 T1] -+",
        "[T0 T1] --",
    };
    t.c2 = {
        "[H0 H1][T0 T1] +-",
        "[H0 H1][T0 T1] -+",
        "[H0 H1][T1 T0] +-",
        "[H0 H1][T1 T0] -+",
    };
    t.c3 = {
        "[H0 H1][H2 T0][T1 T2] +-+",
        "[H0 H1][H2 T0][T1 T2] -+-",
        "[H0 H1][H2 T0][T2 T1] ++-",
        "[H0 H1][H2 T0][T2 T1] --+",
        "[H0 H1][H2 T1][T0 T2] +-+",
        "[H0 H1][H2 T1][T0 T2] -+-",
        "[H0 H1][H2 T1][T2 T0] +++",
        "[H0 H1][H2 T1][T2 T0] ---",
        "[H0 H1][T0 H2][T1 T2] +++",
        "[H0 H1][T0 H2][T1 T2] ---",
        "[H0 H1][T0 H2][T2 T1] +--",
        "[H0 H1][T0 H2][T2 T1] -++",
        "[H0 H1][T0 T2][H2 T1] +-+",
        "[H0 H1][T0 T2][H2 T1] -+-",
        "[H0 H1][T0 T2][T1 H2] ++-",
        "[H0 H1][T0 T2][T1 H2] --+",
        "[H0 H1][T1 H2][T0 T2] ++-",
        "[H0 H1][T1 H2][T0 T2] --+",
        "[H0 H1][T1 H2][T2 T0] +--",
        "[H0 H1][T1 H2][T2 T0] -++",
        "[H0 H1][T1 T2][H2 T0] +-+",
        "[H0 H1][T1 T2][H2 T0] -+-",
        "[H0 H1][T1 T2][T0 H2] +++",
        "[H0 H1][T1 T2][T0 H2] ---",
        "[H0 H1][T2 T0][H2 T1] +++",
        "[H0 H1][T2 T0][H2 T1] ---",
        "[H0 H1][T2 T0][T1 H2] +--",
        "[H0 H1][T2 T0][T1 H2] -++",
        "[H0 H1][T2 T1][H2 T0] ++-",
        "[H0 H1][T2 T1][H2 T0] --+",
        "[H0 H1][T2 T1][T0 H2] +--",
        "[H0 H1][T2 T1][T0 H2] -++",
    };
    t.delta = {
        "[H0 T1][H1 T2][H2 T0] +++",
        "[H0 T1][H1 T2][H2 T0] ---",
        "[H0 T1][H1 T2][T0 H2] +-+",
        "[H0 T1][H1 T2][T0 H2] -+-",
        "[H0 T1][H2 T0][H1 T2] +++",
        "[H0 T1][H2 T0][H1 T2] ---",
        "[H0 T1][H2 T0][T2 H1] +--",
        "[H0 T1][H2 T0][T2 H1] -++",
        "[H0 T1][T0 H2][T2 H1] ++-",
        "[H0 T1][T0 H2][T2 H1] --+",
        "[H0 T1][T2 H1][T0 H2] ++-",
        "[H0 T1][T2 H1][T0 H2] --+",
        "[T0 H1][T1 H2][T2 H0] +++",
        "[T0 H1][T1 H2][T2 H0] ---",
        "[T0 H1][T2 H0][T1 H2] +++",
        "[T0 H1][T2 H0][T1 H2] ---",
    };
    t.sharp = {
        "[H0 H1][H2 H3][T0 T2][T1 T3] ++++",
        "[H0 H1][H2 H3][T0 T2][T1 T3] ----",
        "[H0 H1][H2 H3][T0 T2][T3 T1] +-+-",
        "[H0 H1][H2 H3][T0 T2][T3 T1] -+-+",
        "[H0 H1][H2 H3][T0 T3][T1 T2] ++--",
        "[H0 H1][H2 H3][T0 T3][T1 T2] --++",
        "[H0 H1][H2 H3][T0 T3][T2 T1] +-+-",
        "[H0 H1][H2 H3][T0 T3][T2 T1] -+-+",
        "[H0 H1][H2 H3][T1 T2][T0 T3] ++--",
        "[H0 H1][H2 H3][T1 T2][T0 T3] --++",
        "[H0 H1][H2 H3][T1 T2][T3 T0] +-+-",
        "[H0 H1][H2 H3][T1 T2][T3 T0] -+-+",
        "[H0 H1][H2 H3][T1 T3][T0 T2] ++++",
        "[H0 H1][H2 H3][T1 T3][T0 T2] ----",
        "[H0 H1][H2 H3][T1 T3][T2 T0] +-+-",
        "[H0 H1][H2 H3][T1 T3][T2 T0] -+-+",
        "[H0 H1][H2 H3][T2 T0][T1 T3] +-+-",
        "[H0 H1][H2 H3][T2 T0][T1 T3] -+-+",
        "[H0 H1][H2 H3][T2 T0][T3 T1] ++++",
        "[H0 H1][H2 H3][T2 T0][T3 T1] ----",
        "[H0 H1][H2 H3][T2 T1][T0 T3] +-+-",
        "[H0 H1][H2 H3][T2 T1][T0 T3] -+-+",
        "[H0 H1][H2 H3][T2 T1][T3 T0] ++--",
        "[H0 H1][H2 H3][T2 T1][T3 T0] --++",
        "[H0 H1][H2 H3][T3 T0][T1 T2] +-+-",
        "[H0 H1][H2 H3][T3 T0][T1 T2] -+-+",
        "[H0 H1][H2 H3][T3 T0][T2 T1] ++--",
        "[H0 H1][H2 H3][T3 T0][T2 T1] --++",
        "[H0 H1][H2 H3][T3 T1][T0 T2] +-+-",
        "[H0 H1][H2 H3][T3 T1][T0 T2] -+-+",
        "[H0 H1][H2 H3][T3 T1][T2 T0] ++++",
        "[H0 H1][H2 H3][T3 T1][T2 T0] ----",
        "[H0 H1][T0 T2][H2 H3][T1 T3] ++++",
        "[H0 H1][T0 T2][H2 H3][T1 T3] ----",
        "[H0 H1][T0 T2][H2 H3][T3 T1] +-+-",
        "[H0 H1][T0 T2][H2 H3][T3 T1] -+-+",
        "[H0 H1][T0 T2][H3 H2][T1 T3] ++--",
        "[H0 H1][T0 T2][H3 H2][T1 T3] --++",
        "[H0 H1][T0 T2][H3 H2][T3 T1] +--+",
        "[H0 H1][T0 T2][H3 H2][T3 T1] -++-",
        "[H0 H1][T1 T2][H2 H3][T0 T3] ++--",
        "[H0 H1][T1 T2][H2 H3][T0 T3] --++",
        "[H0 H1][T1 T2][H2 H3][T3 T0] +-+-",
        "[H0 H1][T1 T2][H2 H3][T3 T0] -+-+",
        "[H0 H1][T1 T2][H3 H2][T0 T3] ++++",
        "[H0 H1][T1 T2][H3 H2][T0 T3] ----",
        "[H0 H1][T2 T0][H2 H3][T1 T3] +-+-",
        "[H0 H1][T2 T0][H2 H3][T1 T3] -+-+",
        "[H0 H1][T2 T0][H3 H2][T1 T3] +--+",
        "[H0 H1][T2 T0][H3 H2][T1 T3] -++-",
        "[H0 H1][T2 T1][H2 H3][T0 T3] +-+-",
        "[H0 H1][T2 T1][H2 H3][T0 T3] -+-+",
    };
    t.c2_insertions(); // expand eagerly; the table is shared read-only
    return t;
  }();
  return table;
}

} // namespace weldknot
