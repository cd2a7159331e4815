"""Tree-width of embedded hypergraphs and their duals."""

from ._surftw import (
    SurftwError,
    alpha_max,
    bramble_order,
    build_gkp,
    check_duality_bound,
    dual,
    euler_genus,
    exact_treewidth,
    face_width_at_least,
    from_cycles,
    fuzz,
    grid,
    is_orientable,
    optimal_ptree,
    todinca,
)

__all__ = [
    "SurftwError",
    "alpha_max",
    "bramble_order",
    "build_gkp",
    "check_duality_bound",
    "dual",
    "euler_genus",
    "exact_treewidth",
    "face_width_at_least",
    "from_cycles",
    "fuzz",
    "grid",
    "is_orientable",
    "optimal_ptree",
    "todinca",
]
