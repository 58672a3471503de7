use std::collections::HashMap;

use num_bigint::BigUint;

use super::field::FiniteField;
use crate::error::{domain, Error, Result};
use crate::gf2::{check_index_set, BitMatrix};

/// Refuse geometries whose line-point incidence list exceeds this many entries.
pub const MAX_INCIDENCES: u64 = 50_000_000;

/// Default node budget for [`enumerate_arcs`].
pub const DEFAULT_ARC_BUDGET: u64 = 100_000_000;

/// Point and line counts of PG(dim, q) from the closed forms.
pub fn point_count(dim: u32, q: u64) -> u64 {
    (0..=dim).map(|i| q.pow(i)).sum()
}

pub fn line_count(dim: u32, q: u64) -> u64 {
    point_count(dim, q) * point_count(dim - 1, q) / (q + 1)
}

/// The projective space PG(dim, q) for dim ∈ {2, 3}.
///
/// Points are canonical tuples (first nonzero coordinate 1) in lexicographic
/// order; lines are sorted point-index sets, themselves sorted
/// lexicographically.
#[derive(Debug, Clone)]
pub struct ProjectiveGeometry {
    dim: u32,
    field: FiniteField,
    points: Vec<Vec<u32>>,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
}

impl ProjectiveGeometry {
    pub fn new(dim: u32, q: u32) -> Result<Self> {
        if !(2..=3).contains(&dim) {
            return domain(format!("dimension {dim} unsupported (2 or 3)"));
        }
        let field = FiniteField::new(q)?;
        let q64 = q as u64;
        let incidences = line_count(dim, q64) * (q64 + 1);
        if incidences > MAX_INCIDENCES {
            return Err(Error::Budget {
                what: format!("PG({dim},{q}) incidence structure"),
                estimate: incidences.to_string(),
                budget: MAX_INCIDENCES.to_string(),
            });
        }
        let width = dim as usize + 1;

        let mut points = Vec::new();
        let mut tuple = vec![0u32; width];
        let total = (q as u64).pow(width as u32);
        for code in 0..total {
            let mut c = code;
            for slot in tuple.iter_mut().rev() {
                *slot = (c % q64) as u32;
                c /= q64;
            }
            if tuple.iter().find(|&&x| x != 0) == Some(&1) {
                points.push(tuple.clone());
            }
        }
        let index: HashMap<Vec<u32>, usize> = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        // Each line is the span of a unique 2 x (dim+1) reduced echelon basis.
        let mut lines = Vec::new();
        for c1 in 0..width {
            for c2 in c1 + 1..width {
                let free1: Vec<usize> = (c1 + 1..width).filter(|&j| j != c2).collect();
                let free2: Vec<usize> = (c2 + 1..width).collect();
                let nfree = (free1.len() + free2.len()) as u32;
                for code in 0..q64.pow(nfree) {
                    let mut c = code;
                    let mut r1 = vec![0u32; width];
                    let mut r2 = vec![0u32; width];
                    r1[c1] = 1;
                    r2[c2] = 1;
                    for (row, free) in [(&mut r1, &free1), (&mut r2, &free2)] {
                        for &j in free {
                            row[j] = (c % q64) as u32;
                            c /= q64;
                        }
                    }
                    let mut line = Vec::with_capacity(q as usize + 1);
                    line.push(index[&r2]);
                    for beta in 0..q {
                        let pt: Vec<u32> = r1
                            .iter()
                            .zip(&r2)
                            .map(|(&a, &b)| field.add(a, field.mul(beta, b)))
                            .collect();
                        line.push(index[&pt]);
                    }
                    line.sort_unstable();
                    lines.push(line);
                }
            }
        }
        lines.sort();

        let mut point_lines = vec![Vec::new(); points.len()];
        for (l, line) in lines.iter().enumerate() {
            for &p in line {
                point_lines[p].push(l);
            }
        }
        Ok(Self {
            dim,
            field,
            points,
            lines,
            point_lines,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Lines through `point`, ascending.
    pub fn lines_through(&self, point: usize) -> &[usize] {
        &self.point_lines[point]
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        let (la, lb) = (&self.point_lines[a], &self.point_lines[b]);
        let (mut i, mut j) = (0, 0);
        while i < la.len() && j < lb.len() {
            match la[i].cmp(&lb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(la[i]),
            }
        }
        None
    }

    /// Line-point incidence matrix (rows = lines, columns = points).
    pub fn incidence_matrix(&self) -> BitMatrix {
        BitMatrix::from_supports(self.points.len(), &self.lines)
            .expect("line supports are valid point indices")
    }

    /// Number of points of the arc on each line it touches.
    fn line_hits(&self, point_indices: &[usize]) -> HashMap<usize, usize> {
        let mut hits = HashMap::new();
        for &p in point_indices {
            for &l in &self.point_lines[p] {
                *hits.entry(l).or_insert(0) += 1;
            }
        }
        hits
    }

    /// True iff no three of the points are collinear.
    pub fn is_arc(&self, point_indices: &[usize]) -> Result<bool> {
        check_index_set(point_indices, self.points.len(), "point")?;
        Ok(self.line_hits(point_indices).values().all(|&h| h <= 2))
    }

    /// Tallies unisecants and bisecants of an arc.
    pub fn secant_profile(&self, arc: &[usize]) -> Result<SecantProfile> {
        if !self.is_arc(arc)? {
            return domain("point set is not an arc");
        }
        let hits = self.line_hits(arc);
        let profile = SecantProfile {
            unisecants: hits.values().filter(|&&h| h == 1).count() as u64,
            bisecants: hits.values().filter(|&&h| h == 2).count() as u64,
        };
        if self.dim == 2 {
            debug_assert_eq!(
                profile.unisecants,
                unisecants_closed_form(2, self.q() as u64, arc.len() as u64)
            );
        }
        Ok(profile)
    }
}

/// Unisecant and bisecant counts of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SecantProfile {
    pub unisecants: u64,
    pub bisecants: u64,
}

/// s(q+2-s) in the plane, s(q^2+q+2-s) in PG(3, q).
pub fn unisecants_closed_form(dim: u32, q: u64, s: u64) -> u64 {
    match dim {
        2 => s * (q + 2 - s),
        _ => s * (q * q + q + 2 - s),
    }
}

pub fn bisecants_closed_form(s: u64) -> u64 {
    s * (s.saturating_sub(1)) / 2
}

/// Largest possible arc (plane) or cap (space) size.
pub fn max_arc_size(dim: u32, q: u64) -> u64 {
    match (dim, q % 2) {
        (2, 0) => q + 2,
        (2, _) => q + 1,
        _ => q * q + 1,
    }
}

/// An arc (or cap) of a projective geometry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arc {
    pub points: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ArcEnumeration {
    pub arcs: Vec<Arc>,
    /// Set when the search stopped at `limit`.
    pub truncated: bool,
    pub nodes_visited: u64,
}

/// All `s`-arcs in lexicographic order, stopping after `limit`.
///
/// Orderly backtracking: points are appended in increasing index order and
/// points collinear with two chosen ones are blocked.
pub fn enumerate_arcs(
    geo: &ProjectiveGeometry,
    s: usize,
    limit: usize,
    budget: u64,
) -> Result<ArcEnumeration> {
    let npts = geo.points.len();
    let estimate = crate::bounds::binomial(npts as u64, s as u64);
    if estimate > BigUint::from(budget) {
        return Err(Error::Budget {
            what: format!("{s}-arc enumeration over {npts} points"),
            estimate: estimate.to_string(),
            budget: budget.to_string(),
        });
    }
    let mut out = ArcEnumeration {
        arcs: Vec::new(),
        truncated: false,
        nodes_visited: 0,
    };
    if s == 0 {
        out.arcs.push(Arc { points: Vec::new() });
        return Ok(out);
    }
    let mut blocked = vec![0u32; npts];
    let mut chosen = Vec::with_capacity(s);
    let stop = recurse(geo, s, limit, budget, 0, &mut chosen, &mut blocked, &mut out)?;
    out.truncated = stop;
    Ok(out)
}

/// Returns `Ok(true)` when the limit was hit.
#[allow(clippy::too_many_arguments)]
fn recurse(
    geo: &ProjectiveGeometry,
    s: usize,
    limit: usize,
    budget: u64,
    start: usize,
    chosen: &mut Vec<usize>,
    blocked: &mut [u32],
    out: &mut ArcEnumeration,
) -> Result<bool> {
    let npts = geo.points.len();
    let need = s - chosen.len();
    for x in start..npts {
        if npts - x < need {
            break;
        }
        if blocked[x] > 0 {
            continue;
        }
        out.nodes_visited += 1;
        if out.nodes_visited > budget {
            return Err(Error::Budget {
                what: "arc enumeration nodes".into(),
                estimate: format!(">{budget}"),
                budget: budget.to_string(),
            });
        }
        if need == 1 {
            if out.arcs.len() == limit {
                return Ok(true);
            }
            let mut pts = chosen.clone();
            pts.push(x);
            out.arcs.push(Arc { points: pts });
            continue;
        }
        let touched: Vec<usize> = chosen
            .iter()
            .map(|&y| geo.line_through(x, y).expect("distinct points share a line"))
            .collect();
        for &l in &touched {
            for &p in &geo.lines[l] {
                blocked[p] += 1;
            }
        }
        chosen.push(x);
        let stop = recurse(geo, s, limit, budget, x + 1, chosen, blocked, out)?;
        chosen.pop();
        for &l in &touched {
            for &p in &geo.lines[l] {
                blocked[p] -= 1;
            }
        }
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}
