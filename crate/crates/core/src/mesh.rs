//! Structured tetrahedral meshes of the cube `Ω = [-1, 1]³`.
//!
//! Each of the `n³` cells is split into five tetrahedra: one central tetrahedron spanned
//! by four mutually non-adjacent cube corners and four corner tetrahedra. Neighbouring
//! cells use mirrored splits (a 3D checkerboard) so that every face diagonal joins two
//! vertices of the same global index parity and the faces of adjacent cells match.

use std::collections::HashMap;
use std::io::{self, Write};

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

/// Local vertex pairs of the six tetrahedron edges, in the order of the edge basis.
pub const LOCAL_EDGES: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)];

/// Which global vertex parity the face diagonals connect.
///
/// The two choices give genuinely different meshes. With `Odd` the corners of Ω are the
/// apexes of corner tetrahedra and no face diagonal touches them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiagonalParity {
    /// Diagonals join vertices with even `i + j + k`; the cube corners are on them.
    Even,
    /// Diagonals join vertices with odd `i + j + k`.
    #[default]
    Odd,
}

/// Affine geometry of one tetrahedron: `x(ξ) = x₁ + J ξ`, `J = [x₂-x₁, x₃-x₁, x₄-x₁]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetGeometry {
    pub vertices: [Vector3<f64>; 4],
    pub jacobian: Matrix3<f64>,
    pub det: f64,
    /// `J⁻ᵀ`.
    pub inv_t: Matrix3<f64>,
}

impl TetGeometry {
    pub fn new(vertices: [Vector3<f64>; 4]) -> Result<Self> {
        let [x1, x2, x3, x4] = vertices;
        let jacobian = Matrix3::from_columns(&[x2 - x1, x3 - x1, x4 - x1]);
        let det = jacobian.determinant();
        let h = jacobian.column_iter().map(|c| c.norm()).fold(0.0, f64::max);
        if !(det.abs() >= 1e-14 * h.powi(3)) || h == 0.0 {
            return Err(Error::DegenerateTet { tet: None, det });
        }
        let inv = jacobian.try_inverse().ok_or(Error::DegenerateTet { tet: None, det })?;
        Ok(Self {
            vertices,
            jacobian,
            det,
            inv_t: inv.transpose(),
        })
    }

    pub fn volume(&self) -> f64 {
        self.det.abs() / 6.0
    }

    pub fn centroid(&self) -> Vector3<f64> {
        self.vertices.iter().sum::<Vector3<f64>>() / 4.0
    }

    pub fn to_physical(&self, reference: &Vector3<f64>) -> Vector3<f64> {
        self.vertices[0] + self.jacobian * reference
    }

    pub fn to_reference(&self, x: &Vector3<f64>) -> Vector3<f64> {
        self.inv_t.transpose() * (x - self.vertices[0])
    }

    /// Barycentric coordinates `(1 - ξ - η - ζ, ξ, η, ζ)`.
    pub fn barycentric(&self, x: &Vector3<f64>) -> [f64; 4] {
        let r = self.to_reference(x);
        [1.0 - r.x - r.y - r.z, r.x, r.y, r.z]
    }

    /// Shortest edge length.
    pub fn min_edge(&self) -> f64 {
        LOCAL_EDGES
            .iter()
            .map(|&(a, b)| (self.vertices[b] - self.vertices[a]).norm())
            .fold(f64::INFINITY, f64::min)
    }
}

/// A triangular face and the tetrahedra that contain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: [usize; 3],
    pub tets: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Mesh {
    /// Cells per axis.
    pub n: usize,
    pub vertices: Vec<Vector3<f64>>,
    /// Vertex indices of each tetrahedron, ordered so that `det J > 0`.
    pub tets: Vec<[usize; 4]>,
    /// Edges as `(lower, higher)` vertex index pairs; the global orientation runs low → high.
    pub edges: Vec<[usize; 2]>,
    /// Per tetrahedron, for each entry of [`LOCAL_EDGES`]: the global edge and `+1` if the
    /// local direction agrees with the global orientation, else `-1`.
    pub tet_edges: Vec<[(usize, f64); 6]>,
    pub boundary_vertices: Vec<usize>,
    pub boundary_edges: Vec<usize>,
    vertex_on_boundary: Vec<bool>,
    edge_on_boundary: Vec<bool>,
}

/// Generates the five-tetrahedra-per-cell mesh with `n` cells per axis.
pub fn generate_cube_mesh(n: usize) -> Result<Mesh> {
    generate_cube_mesh_with(n, DiagonalParity::default())
}

pub fn generate_cube_mesh_with(n: usize, parity: DiagonalParity) -> Result<Mesh> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "cells per axis must be a positive even number, got {n}"
        )));
    }
    let np = n + 1;
    let vid = |i: usize, j: usize, k: usize| i + np * (j + np * k);
    let coord = |i: usize| -1.0 + 2.0 * i as f64 / n as f64;

    let mut vertices = Vec::with_capacity(np * np * np);
    for k in 0..np {
        for j in 0..np {
            for i in 0..np {
                vertices.push(Vector3::new(coord(i), coord(j), coord(k)));
            }
        }
    }

    let diag_parity = match parity {
        DiagonalParity::Even => 0,
        DiagonalParity::Odd => 1,
    };
    let mut tets = Vec::with_capacity(5 * n * n * n);
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                // corner c = a + 2b + 4c' of the cell; its local parity is the bit count
                let corner = |c: usize| vid(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1));
                let central_parity = (diag_parity + i + j + k) % 2;
                let central: Vec<usize> = (0..8).filter(|c: &usize| c.count_ones() as usize % 2 == central_parity).collect();
                tets.push(oriented(&vertices, central.iter().map(|&c| corner(c))));
                for c in (0..8usize).filter(|c| c.count_ones() as usize % 2 != central_parity) {
                    tets.push(oriented(&vertices, [c, c ^ 1, c ^ 2, c ^ 4].iter().map(|&c| corner(c))));
                }
            }
        }
    }

    let on_plane = |v: usize| -> u8 {
        let (i, j, k) = (v % np, (v / np) % np, v / (np * np));
        let mut mask = 0u8;
        for (axis, idx) in [i, j, k].into_iter().enumerate() {
            if idx == 0 {
                mask |= 1 << (2 * axis);
            }
            if idx == n {
                mask |= 1 << (2 * axis + 1);
            }
        }
        mask
    };
    let planes: Vec<u8> = (0..vertices.len()).map(on_plane).collect();

    let mut edge_index: HashMap<[usize; 2], usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut tet_edges = Vec::with_capacity(tets.len());
    for t in &tets {
        let local = LOCAL_EDGES.map(|(a, b)| {
            let (va, vb) = (t[a], t[b]);
            let key = [va.min(vb), va.max(vb)];
            let e = *edge_index.entry(key).or_insert_with(|| {
                edges.push(key);
                edges.len() - 1
            });
            (e, if va < vb { 1.0 } else { -1.0 })
        });
        tet_edges.push(local);
    }

    let vertex_on_boundary: Vec<bool> = planes.iter().map(|&m| m != 0).collect();
    // two boundary vertices span a boundary edge only if they share a boundary plane
    let edge_on_boundary: Vec<bool> = edges.iter().map(|&[a, b]| planes[a] & planes[b] != 0).collect();

    Ok(Mesh {
        n,
        boundary_vertices: indices_of(&vertex_on_boundary),
        boundary_edges: indices_of(&edge_on_boundary),
        vertices,
        tets,
        edges,
        tet_edges,
        vertex_on_boundary,
        edge_on_boundary,
    })
}

fn indices_of(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

fn oriented(vertices: &[Vector3<f64>], ids: impl Iterator<Item = usize>) -> [usize; 4] {
    let mut t = [0; 4];
    for (slot, v) in t.iter_mut().zip(ids) {
        *slot = v;
    }
    let j = Matrix3::from_columns(&[
        vertices[t[1]] - vertices[t[0]],
        vertices[t[2]] - vertices[t[0]],
        vertices[t[3]] - vertices[t[0]],
    ]);
    if j.determinant() < 0.0 {
        t.swap(2, 3);
    }
    t
}

impl Mesh {
    pub fn cell_size(&self) -> f64 {
        2.0 / self.n as f64
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_tets(&self) -> usize {
        self.tets.len()
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.vertex_on_boundary[v]
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        self.edge_on_boundary[e]
    }

    pub fn tet_vertices(&self, tet: usize) -> [Vector3<f64>; 4] {
        self.tets[tet].map(|v| self.vertices[v])
    }

    /// Affine map data of tetrahedron `tet`.
    pub fn jacobian(&self, tet: usize) -> Result<TetGeometry> {
        if tet >= self.tets.len() {
            return Err(Error::InvalidInput(format!("tetrahedron index {tet} out of range")));
        }
        TetGeometry::new(self.tet_vertices(tet)).map_err(|e| match e {
            Error::DegenerateTet { det, .. } => Error::DegenerateTet { tet: Some(tet), det },
            other => other,
        })
    }

    /// Finds a tetrahedron containing `point` and the point's reference coordinates in it.
    pub fn locate_point(&self, point: &Vector3<f64>) -> Result<(usize, Vector3<f64>)> {
        const TOL: f64 = 1e-12;
        if point.iter().any(|c| !c.is_finite() || c.abs() > 1.0 + TOL) {
            return Err(Error::InvalidInput(format!("point {point:?} lies outside [-1, 1]³")));
        }
        let h = self.cell_size();
        let cell_of = |c: f64| (((c + 1.0) / h).floor().max(0.0) as usize).min(self.n - 1);
        let (ci, cj, ck) = (cell_of(point.x), cell_of(point.y), cell_of(point.z));
        let cell = ci + self.n * (cj + self.n * ck);
        let mut best: Option<(usize, f64, Vector3<f64>)> = None;
        for tet in 5 * cell..5 * cell + 5 {
            let g = self.jacobian(tet)?;
            let bary = g.barycentric(point);
            let worst = bary.iter().copied().fold(f64::INFINITY, f64::min);
            if best.as_ref().is_none_or(|b| worst > b.1) {
                best = Some((tet, worst, g.to_reference(point)));
            }
        }
        let (tet, worst, reference) = best.expect("every cell holds five tetrahedra");
        if worst < -1e-10 {
            return Err(Error::InvalidInput(format!("could not locate point {point:?}")));
        }
        Ok((tet, reference))
    }

    /// All triangular faces with their incident tetrahedra, sorted by vertex triple.
    pub fn faces(&self) -> Vec<Face> {
        let mut map: HashMap<[usize; 3], Vec<usize>> = HashMap::new();
        for (t, tv) in self.tets.iter().enumerate() {
            for skip in 0..4 {
                let mut f = [0; 3];
                let mut k = 0;
                for (i, &v) in tv.iter().enumerate() {
                    if i != skip {
                        f[k] = v;
                        k += 1;
                    }
                }
                f.sort_unstable();
                map.entry(f).or_default().push(t);
            }
        }
        let mut faces: Vec<Face> = map.into_iter().map(|(vertices, tets)| Face { vertices, tets }).collect();
        faces.sort_by_key(|f| f.vertices);
        faces
    }

    /// Writes the mesh as a legacy ASCII VTK unstructured grid (cell type 10).
    pub fn write_vtk<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "# vtk DataFile Version 3.0")?;
        writeln!(w, "symcurl cube mesh n={} tets={}", self.n, self.tets.len())?;
        writeln!(w, "ASCII")?;
        writeln!(w, "DATASET UNSTRUCTURED_GRID")?;
        writeln!(w, "POINTS {} double", self.vertices.len())?;
        for v in &self.vertices {
            writeln!(w, "{} {} {}", v.x, v.y, v.z)?;
        }
        writeln!(w, "CELLS {} {}", self.tets.len(), 5 * self.tets.len())?;
        for t in &self.tets {
            writeln!(w, "4 {} {} {} {}", t[0], t[1], t[2], t[3])?;
        }
        writeln!(w, "CELL_TYPES {}", self.tets.len())?;
        for _ in &self.tets {
            writeln!(w, "10")?;
        }
        Ok(())
    }
}
