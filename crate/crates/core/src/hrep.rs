//! Halfspace-intersection geometry: given facet normals and support numbers,
//! compute each facet's polygon, area, and adjacency. This is the engine
//! behind `Polytope::from_halfspaces` and the Minkowski solver, where the
//! facet areas are the gradient of the volume in the support numbers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg::{dist, dot, plane_basis3};
use crate::math;

pub(crate) struct FacetGeom {
    /// Facet vertices in ambient coordinates; ordered ring for n = 3,
    /// two endpoints for n = 2, empty if the facet is absent.
    pub verts: Vec<Vec<f64>>,
    /// (n-1)-dimensional facet measure.
    pub area: f64,
    /// Adjacent facet index paired with the shared interface measure
    /// (edge length for n = 3, the constant 1 for n = 2).
    pub neighbors: Vec<(usize, f64)>,
}

pub(crate) fn facet_geometry(
    normals: &[Vec<f64>],
    offsets: &[f64],
    dim: usize,
) -> Result<Vec<FacetGeom>> {
    match dim {
        2 => facets2(normals, offsets),
        3 => facets3(normals, offsets),
        n => Err(GeomError::UnsupportedDimension(n)),
    }
}

fn max_offset(offsets: &[f64]) -> f64 {
    let mut m = 1.0f64;
    for &h in offsets {
        m = m.max(math::abs(h));
    }
    m
}

// ---------------------------------------------------------------- n = 2

fn facets2(normals: &[Vec<f64>], offsets: &[f64]) -> Result<Vec<FacetGeom>> {
    let big = 1e6 * max_offset(offsets);
    let mut out = Vec::with_capacity(normals.len());
    for i in 0..normals.len() {
        let u = &normals[i];
        let h = offsets[i];
        let tang = vec![-u[1], u[0]];
        let p0 = vec![h * u[0], h * u[1]];
        let (mut lo, mut hi) = (-big, big);
        let (mut jlo, mut jhi) = (usize::MAX, usize::MAX);
        let mut empty = false;
        for j in 0..normals.len() {
            if j == i {
                continue;
            }
            let a = dot(&tang, &normals[j]);
            let c = offsets[j] - dot(&p0, &normals[j]);
            if math::abs(a) < 1e-12 {
                if c < -1e-12 {
                    empty = true; // parallel constraint cuts the line away
                    break;
                }
                continue;
            }
            let s = c / a;
            if a > 0.0 {
                if s < hi {
                    hi = s;
                    jhi = j;
                }
            } else if s > lo {
                lo = s;
                jlo = j;
            }
        }
        if empty || hi - lo <= 1e-14 {
            out.push(FacetGeom { verts: Vec::new(), area: 0.0, neighbors: Vec::new() });
            continue;
        }
        if jlo == usize::MAX || jhi == usize::MAX {
            return Err(GeomError::Invalid("halfspace intersection unbounded".into()));
        }
        let pa = vec![p0[0] + lo * tang[0], p0[1] + lo * tang[1]];
        let pb = vec![p0[0] + hi * tang[0], p0[1] + hi * tang[1]];
        let mut neighbors = vec![(jlo, 1.0)];
        if jhi != jlo {
            neighbors.push((jhi, 1.0));
        }
        out.push(FacetGeom { verts: vec![pa, pb], area: hi - lo, neighbors });
    }
    Ok(out)
}

// ---------------------------------------------------------------- n = 3

/// Sutherland-Hodgman clip of a convex polygon by `{y : y . nrm <= c}`,
/// with near-duplicate corners collapsed.
fn clip(poly: Vec<[f64; 2]>, nrm: [f64; 2], c: f64, dedupe_tol: f64) -> Vec<[f64; 2]> {
    let m = poly.len();
    let mut pts: Vec<[f64; 2]> = Vec::with_capacity(m + 2);
    for k in 0..m {
        let a = poly[k];
        let b = poly[(k + 1) % m];
        let da = a[0] * nrm[0] + a[1] * nrm[1] - c;
        let db = b[0] * nrm[0] + b[1] * nrm[1] - c;
        if da <= 0.0 {
            pts.push(a);
        }
        if (da < 0.0) != (db < 0.0) && da != db {
            let t = da / (da - db);
            pts.push([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]);
        }
    }
    let n = pts.len();
    let mut clean: Vec<[f64; 2]> = Vec::with_capacity(n);
    for k in 0..n {
        let prev = pts[(k + n - 1) % n];
        let dx = pts[k][0] - prev[0];
        let dy = pts[k][1] - prev[1];
        if math::sqrt(dx * dx + dy * dy) > dedupe_tol {
            clean.push(pts[k]);
        }
    }
    if clean.len() < 3 {
        return Vec::new();
    }
    clean
}

fn facets3(normals: &[Vec<f64>], offsets: &[f64]) -> Result<Vec<FacetGeom>> {
    let hmax = max_offset(offsets);
    let big = 1e6 * hmax;
    let dedupe_tol = 1e-8 * hmax;
    let id_tol = 1e-6 * hmax;
    let mut out = Vec::with_capacity(normals.len());
    for i in 0..normals.len() {
        let u = &normals[i];
        let h = offsets[i];
        let (e1, e2) = plane_basis3(u);
        let p0: Vec<f64> = (0..3).map(|k| h * u[k]).collect();
        // In-plane halfplane constraints carved by the other facets.
        let mut planar: Vec<Option<([f64; 2], f64)>> = vec![None; normals.len()];
        let mut poly: Vec<[f64; 2]> = vec![[-big, -big], [big, -big], [big, big], [-big, big]];
        let mut empty = false;
        for j in 0..normals.len() {
            if j == i {
                continue;
            }
            let nj = &normals[j];
            let n2 = [dot(nj, &e1), dot(nj, &e2)];
            let c = offsets[j] - dot(&p0, nj);
            let len = math::sqrt(n2[0] * n2[0] + n2[1] * n2[1]);
            if len < 1e-12 {
                if c < -1e-12 {
                    empty = true;
                    break;
                }
                continue;
            }
            // Normalized so the midpoint residual below is a distance.
            planar[j] = Some(([n2[0] / len, n2[1] / len], c / len));
            poly = clip(poly, n2, c, dedupe_tol);
            if poly.is_empty() {
                empty = true;
                break;
            }
        }
        if empty {
            out.push(FacetGeom { verts: Vec::new(), area: 0.0, neighbors: Vec::new() });
            continue;
        }
        // Identify which constraint carries each edge via its midpoint.
        let m = poly.len();
        let mut ids: Vec<usize> = Vec::with_capacity(m);
        for k in 0..m {
            let a = poly[k];
            let b = poly[(k + 1) % m];
            let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
            let mut best = usize::MAX;
            let mut best_r = id_tol;
            for (j, pl) in planar.iter().enumerate() {
                if let Some((n2, c)) = pl {
                    let r = math::abs(mid[0] * n2[0] + mid[1] * n2[1] - c);
                    if r < best_r {
                        best_r = r;
                        best = j;
                    }
                }
            }
            if best == usize::MAX {
                return Err(GeomError::Invalid("halfspace intersection unbounded".into()));
            }
            ids.push(best);
        }
        // Refine each corner as the exact intersection of its two carving
        // constraints; this removes accumulated clipping error.
        let mut refined = poly.clone();
        for k in 0..m {
            let ja = ids[(k + m - 1) % m];
            let jb = ids[k];
            if ja == jb {
                continue;
            }
            let (na, ca) = planar[ja].unwrap();
            let (nb, cb) = planar[jb].unwrap();
            let det = na[0] * nb[1] - na[1] * nb[0];
            if math::abs(det) > 1e-10 {
                refined[k] =
                    [(ca * nb[1] - cb * na[1]) / det, (na[0] * cb - nb[0] * ca) / det];
            }
        }
        // Shoelace area, ambient coordinates, adjacency.
        let mut area2 = 0.0;
        for k in 0..m {
            let a = refined[k];
            let b = refined[(k + 1) % m];
            area2 += a[0] * b[1] - a[1] * b[0];
        }
        let area = math::abs(area2) / 2.0;
        let verts: Vec<Vec<f64>> = refined
            .iter()
            .map(|y| (0..3).map(|k| p0[k] + y[0] * e1[k] + y[1] * e2[k]).collect())
            .collect();
        let mut neighbors: Vec<(usize, f64)> = Vec::new();
        for k in 0..m {
            let a = refined[k];
            let b = refined[(k + 1) % m];
            let dx = a[0] - b[0];
            let dy = a[1] - b[1];
            let len = math::sqrt(dx * dx + dy * dy);
            match neighbors.iter_mut().find(|(jj, _)| *jj == ids[k]) {
                Some(entry) => entry.1 += len,
                None => neighbors.push((ids[k], len)),
            }
        }
        out.push(FacetGeom { verts, area, neighbors });
    }
    Ok(out)
}

/// Volume and centroid of the polytope described by its ordered facet rings
/// (counterclockwise seen from outside), via a signed fan decomposition
/// against the origin.
pub(crate) fn volume_centroid(rings: &[Vec<Vec<f64>>], dim: usize) -> (f64, Vec<f64>) {
    match dim {
        2 => {
            let mut vol = 0.0;
            let mut cx = vec![0.0; 2];
            for f in rings {
                if f.len() != 2 {
                    continue;
                }
                let (a, b) = (&f[0], &f[1]);
                let s = (a[0] * b[1] - a[1] * b[0]) / 2.0;
                vol += s;
                for k in 0..2 {
                    cx[k] += s * (a[k] + b[k]) / 3.0;
                }
            }
            let vol = math::abs(vol);
            if vol > 0.0 {
                cx.iter_mut().for_each(|x| *x /= vol);
            }
            (vol, cx)
        }
        _ => {
            let mut vol = 0.0;
            let mut cx = vec![0.0; 3];
            for f in rings {
                if f.len() < 3 {
                    continue;
                }
                let p0 = &f[0];
                for k in 1..f.len() - 1 {
                    let a = &f[k];
                    let b = &f[k + 1];
                    let det = p0[0] * (a[1] * b[2] - a[2] * b[1])
                        - p0[1] * (a[0] * b[2] - a[2] * b[0])
                        + p0[2] * (a[0] * b[1] - a[1] * b[0]);
                    let v = det / 6.0;
                    vol += v;
                    for t in 0..3 {
                        cx[t] += v * (p0[t] + a[t] + b[t]) / 4.0;
                    }
                }
            }
            let vol = math::abs(vol);
            if vol > 0.0 {
                cx.iter_mut().for_each(|x| *x /= vol);
            }
            (vol, cx)
        }
    }
}

/// Collects the distinct facet-ring vertices of a halfspace intersection.
pub(crate) fn collect_vertices(facets: &[FacetGeom]) -> Vec<Vec<f64>> {
    let mut scale = 1.0f64;
    for f in facets {
        for v in &f.verts {
            for &x in v {
                scale = scale.max(math::abs(x));
            }
        }
    }
    let mut out: Vec<Vec<f64>> = Vec::new();
    for f in facets {
        for v in &f.verts {
            if !out.iter().any(|q| dist(v, q) < 1e-8 * scale) {
                out.push(v.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_h() -> (Vec<Vec<f64>>, Vec<f64>) {
        let mut normals = Vec::new();
        let mut offsets = Vec::new();
        for k in 0..3 {
            for s in [-1.0, 1.0] {
                let mut u = vec![0.0; 3];
                u[k] = s;
                normals.push(u);
                offsets.push(0.5);
            }
        }
        (normals, offsets)
    }

    #[test]
    fn cube_facets() {
        let (n, h) = cube_h();
        let f = facet_geometry(&n, &h, 3).unwrap();
        for fg in &f {
            assert!((fg.area - 1.0).abs() < 1e-12);
            assert_eq!(fg.verts.len(), 4);
            assert_eq!(fg.neighbors.len(), 4);
            for &(_, len) in &fg.neighbors {
                assert!((len - 1.0).abs() < 1e-12);
            }
        }
        let rings: Vec<_> = f.iter().map(|fg| fg.verts.clone()).collect();
        let (vol, cx) = volume_centroid(&rings, 3);
        assert!((vol - 1.0).abs() < 1e-12);
        assert!(cx.iter().all(|&x| x.abs() < 1e-12));
        assert_eq!(collect_vertices(&f).len(), 8);
    }

    #[test]
    fn redundant_facet_is_empty() {
        let (mut n, mut h) = cube_h();
        n.push(vec![1.0, 0.0, 0.0]);
        h.push(0.75); // strictly outside the cube
        let f = facet_geometry(&n, &h, 3).unwrap();
        assert_eq!(f[6].area, 0.0);
        assert!(f[6].verts.is_empty());
    }

    #[test]
    fn octahedron_from_halfspaces() {
        let mut normals = Vec::new();
        let s3 = 1.0 / 3.0f64.sqrt();
        for &x in &[-s3, s3] {
            for &y in &[-s3, s3] {
                for &z in &[-s3, s3] {
                    normals.push(vec![x, y, z]);
                }
            }
        }
        let offsets = vec![s3; 8];
        let f = facet_geometry(&normals, &offsets, 3).unwrap();
        let expect = 3.0f64.sqrt() / 2.0;
        for fg in &f {
            assert!((fg.area - expect).abs() < 1e-10, "area {}", fg.area);
            assert_eq!(fg.verts.len(), 3);
        }
        let rings: Vec<_> = f.iter().map(|fg| fg.verts.clone()).collect();
        let (vol, _) = volume_centroid(&rings, 3);
        assert!((vol - 4.0 / 3.0).abs() < 1e-10);
        assert_eq!(collect_vertices(&f).len(), 6);
    }

    #[test]
    fn unbounded_detected() {
        // A single pair of opposite halfspaces leaves a slab.
        let normals = vec![vec![0.0, 0.0, 1.0], vec![0.0, 0.0, -1.0]];
        let offsets = vec![1.0, 1.0];
        assert!(facet_geometry(&normals, &offsets, 3).is_err());
    }

    #[test]
    fn square_2d() {
        let normals =
            vec![vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0], vec![0.0, -1.0]];
        let offsets = vec![1.0; 4];
        let f = facet_geometry(&normals, &offsets, 2).unwrap();
        for fg in &f {
            assert!((fg.area - 2.0).abs() < 1e-12);
        }
        let rings: Vec<_> = f.iter().map(|fg| fg.verts.clone()).collect();
        let (vol, _) = volume_centroid(&rings, 2);
        assert!((vol - 4.0).abs() < 1e-12);
    }
}
