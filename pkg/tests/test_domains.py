import math

import numpy as np
import pytest

from turanbounds.errors import (
    DegenerateDomainError,
    DescriptorError,
    GeometryInconsistencyError,
    ParameterError,
)
from turanbounds.geometry import (
    GenericDomain,
    boundary_point,
    make_domain,
    transform_domain,
)

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# Descriptor parsing
# ---------------------------------------------------------------------------

def test_descriptor_catalogue():
    assert make_domain("disk:r=1").kind == "disk"
    assert make_domain("ellipse:b=0.5").kind == "ellipse"
    assert make_domain("lp:p=1.5,b=1").kind == "lp"
    assert make_domain("square").kind == "square"
    assert make_domain("polygon:m=26,h=1").kind == "regular_polygon"
    assert make_domain("interval:L=2").kind == "interval"


def test_descriptor_ellipse_axes():
    K = make_domain("ellipse:b=0.5")
    z = np.asarray(K.point(np.array([0.0, 0.25, 0.5, 0.75])))
    np.testing.assert_allclose(z, [1.0, 0.5j, -1.0, -0.5j], atol=1e-15)


@pytest.mark.parametrize("bad", [
    "disk", "disk:r=-1", "disk:r=0", "ellipse:b=1.5", "ellipse:b=0",
    "lp:p=1,b=0.5", "lp:p=0.8", "pentagon", "polygon:m=2,h=1",
    "interval:L=0", "square:h=2", "disk:radius=1", "ellipse:b=abc",
])
def test_bad_descriptors_rejected(bad):
    with pytest.raises((DescriptorError, ParameterError)):
        make_domain(bad)


def test_domain_passthrough():
    K = make_domain("disk:r=2")
    assert make_domain(K) is K


# ---------------------------------------------------------------------------
# Boundary points: normals, curvature, vertices
# ---------------------------------------------------------------------------

def test_boundary_point_ellipse_top():
    K = make_domain("ellipse:b=0.5")
    bp = boundary_point(K, 0.25)
    assert abs(bp.position - 0.5j) < 1e-12
    assert abs(bp.kappa - 0.5) < 1e-12
    assert abs(bp.normal - 1j) < 1e-12


def test_boundary_point_ellipse_right_vertex():
    K = make_domain("ellipse:b=0.5")
    bp = boundary_point(K, 0.0)
    assert abs(bp.position - 1.0) < 1e-12
    assert abs(bp.kappa - 4.0) < 1e-12  # 1/b^2


def test_boundary_point_disk():
    K = make_domain("disk:r=1")
    for t in (0.0, 0.1, 0.35, 0.77):
        bp = boundary_point(K, t)
        assert abs(bp.kappa - 1.0) < 1e-12
        assert abs(bp.normal - bp.position) < 1e-12  # radial outward normal


def test_outward_normal_supports_domain():
    for desc in ("disk:r=1", "ellipse:b=0.25", "lp:p=1.5,b=0.5", "lp:p=3,b=1"):
        K = make_domain(desc)
        _, z = K.boundary_samples(256)
        for t in (0.05, 0.3, 0.62, 0.9):
            bp = boundary_point(K, t)
            proj = np.real(np.conj(bp.normal) * (z - bp.position))
            assert proj.max() <= 1e-9, desc


def test_polygon_vertex_mid_angle_and_absent_curvature():
    K = make_domain("square")
    bp = boundary_point(K, 0.0)  # vertex at 1+0j
    assert bp.kappa is None
    assert abs(bp.position - 1.0) < 1e-15
    # adjacent side angles are 135 and 45+360? -> mid-normal points along +x
    assert abs(bp.normal - 1.0) < 1e-12


def test_polygon_side_has_zero_curvature():
    K = make_domain("square")
    bp = boundary_point(K, 0.125)  # midpoint of the first side
    assert bp.kappa == 0.0
    assert abs(bp.position - (0.5 + 0.5j)) < 1e-12


def test_interval_rejects_boundary_point():
    with pytest.raises(DegenerateDomainError):
        boundary_point(make_domain("interval:L=2"), 0.3)


def test_lp_axis_point_has_chord_tangent():
    # parametrization speed vanishes at the axes for p < 2; the boundary is
    # still C^1 and the normal must point outward
    K = make_domain("lp:p=1.5,b=1")
    bp = boundary_point(K, 0.0)
    assert abs(bp.position - 1.0) < 1e-12
    assert abs(bp.normal - 1.0) < 1e-6
    assert math.isinf(bp.kappa)


# ---------------------------------------------------------------------------
# Containment and projection (dense-scan oracles)
# ---------------------------------------------------------------------------

def test_contains_trivia():
    disk = make_domain("disk:r=1")
    assert disk.contains(0.0)
    assert disk.contains(1.0)  # boundary allowed
    assert not disk.contains(1.0 + 1e-6)
    square = make_domain("square")
    assert square.contains(0.0)
    assert square.contains(0.5 + 0.5j)
    assert not square.contains(0.6 + 0.6j)
    iv = make_domain("interval:L=2")
    assert iv.contains(0.5)
    assert not iv.contains(0.5 + 0.1j)


def test_project_disk_and_square():
    disk = make_domain("disk:r=1")
    assert abs(disk.project(2.0 + 0j) - 1.0) < 1e-15
    assert disk.project(0.1 + 0.2j) == 0.1 + 0.2j
    square = make_domain("square")
    assert square.project(0.0) == 0.0
    assert abs(square.project(1.0 + 1.0j) - (0.5 + 0.5j)) < 1e-12


@pytest.mark.parametrize("desc", ["ellipse:b=0.5", "ellipse:b=0.25",
                                  "lp:p=1.5,b=1", "lp:p=3,b=0.5"])
def test_project_matches_dense_scan(desc):
    K = make_domain(desc)
    t = np.arange(400001) / 400001
    zb = np.asarray(K.point(t))
    rng = np.random.default_rng(5)
    for _ in range(12):
        w = complex(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5))
        if K.outside_margin(w) <= 0:
            assert K.project(w) == w
            continue
        got = abs(K.project(w) - w)
        oracle = float(np.abs(zb - w).min())
        assert got <= oracle + 1e-7
        assert K.outside_margin(K.project(w)) <= 1e-9


def test_project_ellipse_minor_axis_example():
    K = make_domain("ellipse:b=0.5")
    assert abs(K.project(1.0j) - 0.5j) < 1e-8


def test_project_interval():
    iv = make_domain("interval:L=2")
    assert iv.project(5.0 + 1.0j) == 1.0 + 0j
    assert iv.project(-0.3 + 0j) == -0.3 + 0j


# ---------------------------------------------------------------------------
# Convexity / closed-curve invariants
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("desc", ["disk:r=1", "ellipse:b=0.25", "lp:p=1.5,b=0.5",
                                  "lp:p=4,b=1", "square", "polygon:m=7,h=0.5"])
def test_midpoint_convexity(desc):
    K = make_domain(desc)
    _, z = K.boundary_samples(64)
    mids = 0.5 * (z[:, None] + z[None, :]).ravel()
    worst = max(K.outside_margin(complex(w)) for w in mids)
    assert worst <= 1e-9


@pytest.mark.parametrize("desc", ["disk:r=2", "ellipse:b=0.5", "lp:p=1.5,b=1",
                                  "square"])
def test_arclength_consistency(desc):
    K = make_domain(desc)
    # chord lengths on a fine grid sum to the perimeter
    t = np.arange(20000) / 20000
    z = np.asarray(K.point(t))
    chord = float(np.abs(np.roll(z, -1) - z).sum())
    assert abs(chord - K.perimeter()) / K.perimeter() < 1e-5
    # arclength is monotone and ends at the perimeter
    s = np.asarray(K.arclength(np.linspace(0, 0.999999, 512)))
    assert np.all(np.diff(s) >= -1e-12)


# ---------------------------------------------------------------------------
# Generic domains
# ---------------------------------------------------------------------------

def test_generic_from_callables_matches_catalogue():
    E = make_domain("ellipse:b=0.5")
    G = transform_domain(E)  # identity transform
    for t in (0.0, 0.2, 0.45, 0.8):
        assert abs(complex(G.point(t)) - complex(E.point(t))) < 1e-14
        assert abs(float(G.curvature(t)) - float(E.curvature(t))) < 1e-12


def test_generic_fd_curvature_accuracy():
    # bare position callable: curvature from finite differences
    G = GenericDomain(lambda t: np.cos(TWO_PI * np.asarray(t))
                      + 0.5j * np.sin(TWO_PI * np.asarray(t)),
                      label="fd-ellipse")
    E = make_domain("ellipse:b=0.5")
    for t in (0.03, 0.21, 0.4, 0.77):
        assert abs(float(G.curvature(t)) - float(E.curvature(t))) < 1e-4


def test_generic_from_csv(tmp_path):
    t = np.arange(720) / 720
    z = np.cos(TWO_PI * t) + 0.5j * np.sin(TWO_PI * t)
    path = tmp_path / "boundary.csv"
    rows = "\n".join(f"{tt},{zz.real},{zz.imag}" for tt, zz in zip(t, z))
    path.write_text("t,x,y\n" + rows + "\n")
    G = make_domain(f"generic:file={path}")
    E = make_domain("ellipse:b=0.5")
    for tt in (0.1, 0.33, 0.66):
        assert abs(complex(G.point(tt)) - complex(E.point(tt))) < 1e-6
        assert abs(float(G.curvature(tt)) - float(E.curvature(tt))) < 1e-3
    assert G.contains(0.0)
    assert not G.contains(2.0 + 0j)


def test_generic_rejects_nonconvex_csv(tmp_path):
    t = np.arange(256) / 256
    r = 1.0 + 0.4 * np.cos(5 * TWO_PI * t)  # five-petal star: not convex
    z = r * np.exp(1j * TWO_PI * t)
    path = tmp_path / "star.csv"
    rows = "\n".join(f"{tt},{zz.real},{zz.imag}" for tt, zz in zip(t, z))
    path.write_text("t,x,y\n" + rows + "\n")
    with pytest.raises(GeometryInconsistencyError):
        make_domain(f"generic:file={path}")


def test_transform_domain_scaling_of_curvature():
    E = make_domain("ellipse:b=0.5")
    G = transform_domain(E, rotate=0.7, translate=3.0 - 2.0j, scale=2.0)
    assert abs(float(G.curvature(0.25)) - 0.25) < 1e-12  # kappa scales by 1/t
