//! Global numbering of the unknowns of each family.
//!
//! | family   | global unknowns                    | local `→` global                         |
//! |----------|------------------------------------|------------------------------------------|
//! | Lagrange | `9` per vertex                     | `9k + v → 9·vertex + v`                  |
//! | Nédélec  | `3` per edge (one per row)         | `3i + r → 3·edge + r`                    |
//! | SymCurl  | `8` per vertex, `4` per element    | `9k + i → 8·vertex + i` for `i < 8`, the trace functional `9k + 8 → 8V + 4t + k` |

use crate::elements::voigt::{SHARED_FUNCTIONALS, TRACE_FUNCTIONAL};
use crate::elements::Family;
use crate::mesh::Mesh;

#[derive(Debug, Clone)]
pub struct DofMap {
    pub family: Family,
    pub count: usize,
    local_to_global: Vec<usize>,
    boundary: Vec<bool>,
}

impl DofMap {
    /// Global indices of the local unknowns of tetrahedron `tet`.
    pub fn local(&self, tet: usize) -> &[usize] {
        let n = self.family.local_dofs();
        &self.local_to_global[n * tet..n * (tet + 1)]
    }

    pub fn num_tets(&self) -> usize {
        self.local_to_global.len() / self.family.local_dofs()
    }

    pub fn is_boundary(&self, dof: usize) -> bool {
        self.boundary[dof]
    }

    /// Sorted indices of the unknowns fixed by Dirichlet data.
    pub fn boundary_dofs(&self) -> Vec<usize> {
        (0..self.count).filter(|&d| self.boundary[d]).collect()
    }

    pub fn num_boundary(&self) -> usize {
        self.boundary.iter().filter(|&&b| b).count()
    }
}

pub fn build_dof_map(family: Family, mesh: &Mesh) -> DofMap {
    let nv = mesh.num_vertices();
    let mut local_to_global = Vec::with_capacity(family.local_dofs() * mesh.num_tets());
    let (count, boundary) = match family {
        Family::Lagrange => {
            for t in &mesh.tets {
                local_to_global.extend(t.iter().flat_map(|&v| (0..9).map(move |c| 9 * v + c)));
            }
            let boundary = (0..9 * nv).map(|d| mesh.is_boundary_vertex(d / 9)).collect();
            (9 * nv, boundary)
        }
        Family::Nedelec => {
            for te in &mesh.tet_edges {
                local_to_global.extend(te.iter().flat_map(|&(e, _)| (0..3).map(move |r| 3 * e + r)));
            }
            let ne = mesh.num_edges();
            let boundary = (0..3 * ne).map(|d| mesh.is_boundary_edge(d / 3)).collect();
            (3 * ne, boundary)
        }
        Family::SymCurl => {
            let shared = SHARED_FUNCTIONALS * nv;
            for (t, verts) in mesh.tets.iter().enumerate() {
                for (k, &v) in verts.iter().enumerate() {
                    for i in 0..9 {
                        local_to_global.push(if i == TRACE_FUNCTIONAL {
                            shared + 4 * t + k
                        } else {
                            SHARED_FUNCTIONALS * v + i
                        });
                    }
                }
            }
            let count = shared + 4 * mesh.num_tets();
            let boundary = (0..count)
                .map(|d| d < shared && mesh.is_boundary_vertex(d / SHARED_FUNCTIONALS))
                .collect();
            (count, boundary)
        }
    };
    DofMap {
        family,
        count,
        local_to_global,
        boundary,
    }
}
