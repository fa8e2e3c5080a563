//! Convex hulls of point sets in R^2 and R^3: vertex extraction and
//! supporting facets with merged coplanar faces.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg::{cross3, dist, dot, norm, plane_basis3, sub};
use crate::math;

pub(crate) struct HullFacet {
    /// Outer unit normal.
    pub normal: Vec<f64>,
    /// Support number in the normal direction.
    pub offset: f64,
    /// (n-1)-dimensional facet area.
    pub area: f64,
    /// Indices into the hull vertex list, ordered along the facet boundary.
    pub vertex_ids: Vec<usize>,
}

pub(crate) struct HullResult {
    pub vertices: Vec<Vec<f64>>,
    pub facets: Vec<HullFacet>,
}

pub(crate) fn convex_hull(points: &[Vec<f64>], dim: usize) -> Result<HullResult> {
    match dim {
        2 => hull2(points),
        3 => hull3(points),
        n => Err(GeomError::UnsupportedDimension(n)),
    }
}

fn dedupe(points: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for p in points {
        if !out.iter().any(|q| dist(p, q) < tol) {
            out.push(p.clone());
        }
    }
    out
}

fn bbox_scale(points: &[Vec<f64>], dim: usize) -> f64 {
    let mut s = 0.0f64;
    for p in points {
        for k in 0..dim {
            s = s.max(math::abs(p[k]));
        }
    }
    s.max(1.0)
}

// ---------------------------------------------------------------- 2D hull

fn hull2(points: &[Vec<f64>]) -> Result<HullResult> {
    let scale = bbox_scale(points, 2);
    let mut pts = dedupe(points, 1e-12 * scale);
    if pts.len() < 3 {
        return Err(GeomError::NotFullDimensional);
    }
    pts.sort_by(|a, b| a[0].partial_cmp(&b[0]).unwrap().then(a[1].partial_cmp(&b[1]).unwrap()));
    let cross = |o: &[f64], a: &[f64], b: &[f64]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let eps = 1e-12 * scale * scale;
    let mut lower: Vec<usize> = Vec::new();
    for i in 0..pts.len() {
        while lower.len() >= 2
            && cross(&pts[lower[lower.len() - 2]], &pts[lower[lower.len() - 1]], &pts[i]) <= eps
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for i in (0..pts.len()).rev() {
        while upper.len() >= 2
            && cross(&pts[upper[upper.len() - 2]], &pts[upper[upper.len() - 1]], &pts[i]) <= eps
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    let ring: Vec<usize> = lower.into_iter().chain(upper).collect();
    if ring.len() < 3 {
        return Err(GeomError::NotFullDimensional);
    }
    let vertices: Vec<Vec<f64>> = ring.iter().map(|&i| pts[i].clone()).collect();
    let m = vertices.len();
    let mut facets = Vec::with_capacity(m);
    for i in 0..m {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % m];
        let e = sub(b, a);
        let len = norm(&e);
        if len < 1e-12 * scale {
            continue;
        }
        // Ring is counterclockwise, so the outward normal is the edge
        // direction rotated clockwise.
        let normal = vec![e[1] / len, -e[0] / len];
        let offset = dot(&normal, a);
        facets.push(HullFacet { normal, offset, area: len, vertex_ids: vec![i, (i + 1) % m] });
    }
    Ok(HullResult { vertices, facets })
}

/// Counterclockwise convex-hull ring of planar points, as indices; strict
/// turn threshold `eps` (an area) drops collinear points.
fn ring2(p: &[[f64; 2]], eps: f64) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..p.len()).collect();
    idx.sort_by(|&a, &b| {
        p[a][0]
            .partial_cmp(&p[b][0])
            .unwrap()
            .then(p[a][1].partial_cmp(&p[b][1]).unwrap())
    });
    let cross = |o: usize, a: usize, b: usize| {
        (p[a][0] - p[o][0]) * (p[b][1] - p[o][1]) - (p[a][1] - p[o][1]) * (p[b][0] - p[o][0])
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], i) <= eps {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], i) <= eps {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

// ---------------------------------------------------------------- 3D hull

#[derive(Clone)]
struct Tri {
    v: [usize; 3],
    normal: Vec<f64>,
    offset: f64,
    alive: bool,
}

fn tri_plane(pts: &[Vec<f64>], a: usize, b: usize, c: usize) -> Option<(Vec<f64>, f64)> {
    let n = cross3(&sub(&pts[b], &pts[a]), &sub(&pts[c], &pts[a]));
    let len = norm(&n);
    if len < 1e-300 {
        return None;
    }
    let normal: Vec<f64> = n.iter().map(|x| x / len).collect();
    let offset = dot(&normal, &pts[a]);
    Some((normal, offset))
}

fn hull3(points: &[Vec<f64>]) -> Result<HullResult> {
    let scale = bbox_scale(points, 3);
    let pts = dedupe(points, 1e-12 * scale);
    if pts.len() < 4 {
        return Err(GeomError::NotFullDimensional);
    }
    let eps_vis = 1e-10 * scale;

    // Initial tetrahedron: spread-out extremes.
    let i0 = 0;
    let i1 = (0..pts.len())
        .max_by(|&a, &b| dist(&pts[a], &pts[i0]).partial_cmp(&dist(&pts[b], &pts[i0])).unwrap())
        .unwrap();
    let d01 = sub(&pts[i1], &pts[i0]);
    let line_dist = |p: &[f64]| -> f64 {
        let v = sub(p, &pts[i0]);
        let t = dot(&v, &d01) / dot(&d01, &d01);
        let mut d = 0.0;
        for k in 0..3 {
            let r = v[k] - t * d01[k];
            d += r * r;
        }
        math::sqrt(d)
    };
    let i2 = (0..pts.len())
        .max_by(|&a, &b| line_dist(&pts[a]).partial_cmp(&line_dist(&pts[b])).unwrap())
        .unwrap();
    if line_dist(&pts[i2]) < 1e-9 * scale {
        return Err(GeomError::NotFullDimensional);
    }
    let (pn, po) = tri_plane(&pts, i0, i1, i2).ok_or(GeomError::NotFullDimensional)?;
    let i3 = (0..pts.len())
        .max_by(|&a, &b| {
            math::abs(dot(&pn, &pts[a]) - po)
                .partial_cmp(&math::abs(dot(&pn, &pts[b]) - po))
                .unwrap()
        })
        .unwrap();
    if math::abs(dot(&pn, &pts[i3]) - po) < 1e-9 * scale {
        return Err(GeomError::NotFullDimensional);
    }

    let inner: Vec<f64> = (0..3)
        .map(|k| (pts[i0][k] + pts[i1][k] + pts[i2][k] + pts[i3][k]) / 4.0)
        .collect();
    let mut tris: Vec<Tri> = Vec::new();
    let add_tri = |tris: &mut Vec<Tri>, a: usize, b: usize, c: usize| -> Result<()> {
        let (mut normal, mut offset) =
            tri_plane(&pts, a, b, c).ok_or_else(|| GeomError::Invalid("degenerate hull triangle".into()))?;
        let mut v = [a, b, c];
        if dot(&normal, &inner) > offset {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
            v.swap(1, 2);
        }
        tris.push(Tri { v, normal, offset, alive: true });
        Ok(())
    };
    add_tri(&mut tris, i0, i1, i2)?;
    add_tri(&mut tris, i0, i1, i3)?;
    add_tri(&mut tris, i0, i2, i3)?;
    add_tri(&mut tris, i1, i2, i3)?;

    let seed = [i0, i1, i2, i3];
    for p in 0..pts.len() {
        if seed.contains(&p) {
            continue;
        }
        let visible: Vec<usize> = tris
            .iter()
            .enumerate()
            .filter(|(_, t)| t.alive && dot(&t.normal, &pts[p]) - t.offset > eps_vis)
            .map(|(i, _)| i)
            .collect();
        if visible.is_empty() {
            continue;
        }
        // Horizon: directed edges of visible triangles whose reverse belongs
        // to a non-visible live triangle.
        let mut edge_set: Vec<(usize, usize)> = Vec::new();
        for &ti in &visible {
            let v = tris[ti].v;
            edge_set.push((v[0], v[1]));
            edge_set.push((v[1], v[2]));
            edge_set.push((v[2], v[0]));
        }
        let horizon: Vec<(usize, usize)> =
            edge_set.iter().copied().filter(|&(a, b)| !edge_set.contains(&(b, a))).collect();
        for &ti in &visible {
            tris[ti].alive = false;
        }
        for (a, b) in horizon {
            add_tri(&mut tris, a, b, p)?;
        }
    }

    // Merge coplanar triangles into facets.
    let live: Vec<&Tri> = tris.iter().filter(|t| t.alive).collect();
    let mut groups: Vec<(Vec<f64>, f64, Vec<usize>)> = Vec::new();
    for t in &live {
        let mut placed = false;
        for g in groups.iter_mut() {
            if dist(&g.0, &t.normal) < 1e-7 && math::abs(g.1 - t.offset) < 1e-7 * scale {
                g.2.extend_from_slice(&t.v);
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push((t.normal.clone(), t.offset, t.v.to_vec()));
        }
    }

    let mut vertices: Vec<Vec<f64>> = Vec::new();
    let vid = |vertices: &mut Vec<Vec<f64>>, p: &Vec<f64>| -> usize {
        for (i, q) in vertices.iter().enumerate() {
            if dist(p, q) < 1e-10 * scale {
                return i;
            }
        }
        vertices.push(p.clone());
        vertices.len() - 1
    };
    let mut facets = Vec::with_capacity(groups.len());
    for (normal0, _off, ids) in groups {
        let mut uniq: Vec<usize> = Vec::new();
        for i in ids {
            if !uniq.contains(&i) {
                uniq.push(i);
            }
        }
        // Project facet points to the plane and take their 2D hull ring:
        // this drops collinear edge points and points interior to the face
        // polygon (both occur when the input has boundary lattice points).
        let (e1, e2) = plane_basis3(&normal0);
        let p2: Vec<[f64; 2]> = uniq
            .iter()
            .map(|&i| [dot(&pts[i], &e1), dot(&pts[i], &e2)])
            .collect();
        let ring = ring2(&p2, 1e-9 * scale * scale);
        if ring.len() < 3 {
            continue;
        }
        let corners: Vec<usize> = ring.into_iter().map(|k| uniq[k]).collect();
        // Newell normal over the corner ring.
        let mut nn = [0.0f64; 3];
        for k in 0..corners.len() {
            let a = &pts[corners[k]];
            let b = &pts[corners[(k + 1) % corners.len()]];
            nn[0] += (a[1] - b[1]) * (a[2] + b[2]);
            nn[1] += (a[2] - b[2]) * (a[0] + b[0]);
            nn[2] += (a[0] - b[0]) * (a[1] + b[1]);
        }
        let nlen = norm(&nn);
        let mut normal: Vec<f64> = nn.iter().map(|x| x / nlen).collect();
        if dot(&normal, &normal0) < 0.0 {
            normal.iter_mut().for_each(|x| *x = -*x);
        }
        let offset =
            corners.iter().map(|&i| dot(&normal, &pts[i])).sum::<f64>() / corners.len() as f64;
        let area = nlen / 2.0;
        let vertex_ids: Vec<usize> =
            corners.iter().map(|&i| vid(&mut vertices, &pts[i])).collect();
        facets.push(HullFacet { normal, offset, area, vertex_ids });
    }
    if facets.len() < 4 {
        return Err(GeomError::NotFullDimensional);
    }
    Ok(HullResult { vertices, facets })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_pts(h: f64) -> Vec<Vec<f64>> {
        let mut v = Vec::new();
        for &x in &[-h, h] {
            for &y in &[-h, h] {
                for &z in &[-h, h] {
                    v.push(vec![x, y, z]);
                }
            }
        }
        v
    }

    #[test]
    fn cube_hull() {
        let h = convex_hull(&cube_pts(0.5), 3).unwrap();
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        for f in &h.facets {
            assert!((f.area - 1.0).abs() < 1e-12, "area {}", f.area);
            assert!((f.offset - 0.5).abs() < 1e-12);
            assert_eq!(f.vertex_ids.len(), 4);
        }
    }

    #[test]
    fn hull_skips_interior_and_midpoints() {
        // Lattice {-1,0,1}^3: hull is the cube [-1,1]^3; the 19 non-corner
        // points must not survive as vertices.
        let mut pts = Vec::new();
        for x in -1..=1 {
            for y in -1..=1 {
                for z in -1..=1 {
                    pts.push(vec![x as f64, y as f64, z as f64]);
                }
            }
        }
        let h = convex_hull(&pts, 3).unwrap();
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        for f in &h.facets {
            assert!((f.area - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn octahedron_hull() {
        let mut pts = Vec::new();
        for k in 0..3 {
            for s in [-1.0, 1.0] {
                let mut p = vec![0.0; 3];
                p[k] = s;
                pts.push(p);
            }
        }
        let h = convex_hull(&pts, 3).unwrap();
        assert_eq!(h.vertices.len(), 6);
        assert_eq!(h.facets.len(), 8);
        let a = 3.0f64.sqrt() / 2.0;
        for f in &h.facets {
            assert!((f.area - a).abs() < 1e-12);
            assert!((f.offset - 1.0 / 3.0f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_rejected() {
        let pts = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 1.0, 0.0],
        ];
        assert!(matches!(convex_hull(&pts, 3), Err(GeomError::NotFullDimensional)));
    }

    #[test]
    fn square_hull_2d() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
            vec![0.5, 0.5],
            vec![0.5, 0.0],
        ];
        let h = convex_hull(&pts, 2).unwrap();
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.facets.len(), 4);
        for f in &h.facets {
            assert!((f.area - 1.0).abs() < 1e-12);
        }
    }
}
