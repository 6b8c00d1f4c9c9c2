//! Uniform-grid geometry, domain shapes, masks, and measures.
//!
//! All discretizations live on a uniform cell grid. A cell belongs to a
//! domain iff its center satisfies the shape predicate; 2D shapes are
//! embedded in the smallest axis-aligned square of cells covering them, and
//! exterior cells carry the zero Dirichlet value implicitly.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Domain shapes. Annuli have unit width (outer radius `b + 1`) so the inner
/// radius `b` is the single scan parameter; a sector is the angular slice
/// `0 ≤ θ ≤ π/N` of its annulus and shares the annulus embedding box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase", deny_unknown_fields)]
pub enum Shape {
    Interval { a: f64, b: f64 },
    Rectangle { width: f64, height: f64 },
    Disk { radius: f64 },
    Annulus { b: f64 },
    Sector { b: f64, n_sector: u32 },
}

impl Shape {
    pub fn dim(&self) -> usize {
        match self {
            Shape::Interval { .. } => 1,
            _ => 2,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Shape::Interval { a, b } => format!("interval({a}, {b})"),
            Shape::Rectangle { width, height } => format!("rectangle({width} x {height})"),
            Shape::Disk { radius } => format!("disk(r={radius})"),
            Shape::Annulus { b } => format!("annulus(b={b})"),
            Shape::Sector { b, n_sector } => format!("sector(b={b}, N={n_sector})"),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidShape(msg));
        match *self {
            Shape::Interval { a, b } => {
                if !(a < b) || !a.is_finite() || !b.is_finite() {
                    return bad(format!("interval requires a < b, got ({a}, {b})"));
                }
            }
            Shape::Rectangle { width, height } => {
                if !(width > 0.0 && height > 0.0) {
                    return bad(format!("rectangle requires positive sides, got {width} x {height}"));
                }
            }
            Shape::Disk { radius } => {
                if !(radius > 0.0) {
                    return bad(format!("disk requires radius > 0, got {radius}"));
                }
            }
            Shape::Annulus { b } => {
                if !(b > 0.0) {
                    return bad(format!("annulus requires b > 0, got {b}"));
                }
            }
            Shape::Sector { b, n_sector } => {
                if !(b > 0.0) || n_sector == 0 {
                    return bad(format!("sector requires b > 0 and N >= 1, got b={b}, N={n_sector}"));
                }
            }
        }
        Ok(())
    }
}

/// Uniform grid: `n` cells per axis with spacing `h`; cell centers are
/// `origin + index·h` per axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub dim: usize,
    pub n: usize,
    pub h: f64,
    pub origin: [f64; 2],
}

impl GridSpec {
    /// Total number of grid cells in the embedding box.
    pub fn cells(&self) -> usize {
        if self.dim == 1 {
            self.n
        } else {
            self.n * self.n
        }
    }

    /// Volume of one cell, `h^dim`.
    pub fn cell_volume(&self) -> f64 {
        self.h.powi(self.dim as i32)
    }

    /// Center coordinates of the cell with linear index `idx` (row-major by
    /// the first axis in 2D).
    pub fn center(&self, idx: usize) -> [f64; 2] {
        if self.dim == 1 {
            [self.origin[0] + idx as f64 * self.h, 0.0]
        } else {
            let ix = idx / self.n;
            let iy = idx % self.n;
            [
                self.origin[0] + ix as f64 * self.h,
                self.origin[1] + iy as f64 * self.h,
            ]
        }
    }

    /// Per-axis integer coordinates of a linear index.
    pub fn axes(&self, idx: usize) -> [usize; 2] {
        if self.dim == 1 {
            [idx, 0]
        } else {
            [idx / self.n, idx % self.n]
        }
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        if self.dim == 1 {
            ix
        } else {
            ix * self.n + iy
        }
    }
}

/// A discretized domain: the embedding grid plus the inside predicate
/// evaluated at cell centers.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainMask {
    pub grid: GridSpec,
    pub inside: Vec<bool>,
    pub shape: Shape,
    inside_cells: Vec<usize>,
}

impl DomainMask {
    /// Lebesgue measure of the mask: inside-cell count times `h^dim`.
    pub fn measure(&self) -> f64 {
        self.inside_cells.len() as f64 * self.grid.cell_volume()
    }

    pub fn inside_count(&self) -> usize {
        self.inside_cells.len()
    }

    /// Linear indices of inside cells, ascending.
    pub fn inside_cells(&self) -> &[usize] {
        &self.inside_cells
    }

    /// True if the cell is inside and has at least one grid neighbor outside
    /// the domain (or touches the embedding box edge).
    pub fn is_boundary_adjacent(&self, idx: usize) -> bool {
        if !self.inside[idx] {
            return false;
        }
        let n = self.grid.n;
        let [ix, iy] = self.grid.axes(idx);
        let mut probe = |jx: isize, jy: isize| -> bool {
            if jx < 0 || jx >= n as isize {
                return true;
            }
            if self.grid.dim == 2 && (jy < 0 || jy >= n as isize) {
                return true;
            }
            !self.inside[self.grid.index(jx as usize, jy as usize)]
        };
        if self.grid.dim == 1 {
            probe(ix as isize - 1, 0) || probe(ix as isize + 1, 0)
        } else {
            probe(ix as isize - 1, iy as isize)
                || probe(ix as isize + 1, iy as isize)
                || probe(ix as isize, iy as isize - 1)
                || probe(ix as isize, iy as isize + 1)
        }
    }
}

/// Build the mask of a shape at the given resolution (cells per axis).
///
/// Fails when no cell center lands inside the shape, e.g. a thin annulus at a
/// resolution too coarse to place a center in the width-one ring.
pub fn build_domain(shape: &Shape, resolution: usize) -> Result<DomainMask> {
    shape.validate()?;
    if resolution < 2 {
        return Err(Error::InvalidShape(format!(
            "resolution must be >= 2, got {resolution}"
        )));
    }
    let n = resolution;
    let grid = match *shape {
        Shape::Interval { a, b } => {
            let h = (b - a) / n as f64;
            GridSpec {
                dim: 1,
                n,
                h,
                origin: [a + h / 2.0, 0.0],
            }
        }
        Shape::Rectangle { width, height } => square_grid(width.max(height), n),
        Shape::Disk { radius } => square_grid(2.0 * radius, n),
        Shape::Annulus { b } | Shape::Sector { b, .. } => square_grid(2.0 * (b + 1.0), n),
    };
    let mut inside = vec![false; grid.cells()];
    for (idx, flag) in inside.iter_mut().enumerate() {
        let [x, y] = grid.center(idx);
        *flag = match *shape {
            Shape::Interval { a, b } => a < x && x < b,
            Shape::Rectangle { width, height } => {
                x.abs() < width / 2.0 && y.abs() < height / 2.0
            }
            Shape::Disk { radius } => x * x + y * y < radius * radius,
            Shape::Annulus { b } => {
                let r = x.hypot(y);
                b < r && r < b + 1.0
            }
            Shape::Sector { b, n_sector } => {
                let r = x.hypot(y);
                let theta = y.atan2(x);
                b < r && r < b + 1.0 && theta >= 0.0 && theta <= std::f64::consts::PI / n_sector as f64
            }
        };
    }
    let inside_cells: Vec<usize> = (0..inside.len()).filter(|&i| inside[i]).collect();
    if inside_cells.is_empty() {
        return Err(Error::EmptyDomain {
            shape: shape.label(),
            resolution,
        });
    }
    Ok(DomainMask {
        grid,
        inside,
        shape: *shape,
        inside_cells,
    })
}

fn square_grid(side: f64, n: usize) -> GridSpec {
    let h = side / n as f64;
    GridSpec {
        dim: 2,
        n,
        h,
        origin: [-side / 2.0 + h / 2.0, -side / 2.0 + h / 2.0],
    }
}

/// Measure of an arbitrary cell set on a grid.
pub fn measure(cells: &[bool], grid: &GridSpec) -> f64 {
    cells.iter().filter(|&&b| b).count() as f64 * grid.cell_volume()
}

/// A subset `D` of a domain, kept as a cell mask over the embedding grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub cells: Vec<bool>,
    pub target_measure: f64,
    count: usize,
    cell_volume: f64,
}

impl Configuration {
    /// Build from a cell mask; every configuration cell must lie inside the
    /// parent domain.
    pub fn new(cells: Vec<bool>, domain: &DomainMask, target_measure: f64) -> Result<Self> {
        if cells.len() != domain.grid.cells() {
            return Err(Error::ShapeMismatch {
                expected: domain.grid.cells(),
                got: cells.len(),
            });
        }
        if cells.iter().zip(&domain.inside).any(|(&c, &ins)| c && !ins) {
            return Err(Error::InvalidShape(
                "configuration cell outside the parent domain".into(),
            ));
        }
        let count = cells.iter().filter(|&&b| b).count();
        Ok(Configuration {
            cells,
            target_measure,
            count,
            cell_volume: domain.grid.cell_volume(),
        })
    }

    pub fn empty(domain: &DomainMask) -> Self {
        Configuration {
            cells: vec![false; domain.grid.cells()],
            target_measure: 0.0,
            count: 0,
            cell_volume: domain.grid.cell_volume(),
        }
    }

    pub fn cell_count(&self) -> usize {
        self.count
    }

    /// Realized measure, `count · h^dim`.
    pub fn measure(&self) -> f64 {
        self.count as f64 * self.cell_volume
    }

    /// Run-length encoding of the mask: alternating run lengths starting with
    /// an outside run (possibly zero).
    pub fn to_rle(&self) -> Vec<usize> {
        mask_to_rle(&self.cells)
    }

    pub fn from_rle(rle: &[usize], domain: &DomainMask, target_measure: f64) -> Result<Self> {
        let cells = rle_to_mask(rle, domain.grid.cells())?;
        Configuration::new(cells, domain, target_measure)
    }
}

/// RLE of a boolean mask: alternating run lengths, first run counts `false`.
pub fn mask_to_rle(cells: &[bool]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut state = false;
    let mut len = 0usize;
    for &c in cells {
        if c == state {
            len += 1;
        } else {
            runs.push(len);
            state = c;
            len = 1;
        }
    }
    runs.push(len);
    runs
}

pub fn rle_to_mask(rle: &[usize], total: usize) -> Result<Vec<bool>> {
    let sum: usize = rle.iter().sum();
    if sum != total {
        return Err(Error::ShapeMismatch {
            expected: total,
            got: sum,
        });
    }
    let mut cells = Vec::with_capacity(total);
    let mut state = false;
    for &len in rle {
        cells.extend(std::iter::repeat(state).take(len));
        state = !state;
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_four_cells() {
        let dom = build_domain(&Shape::Interval { a: -1.0, b: 1.0 }, 4).unwrap();
        assert_eq!(dom.inside_count(), 4);
        assert_eq!(dom.grid.h, 0.5);
        assert_eq!(dom.measure(), 2.0);
        // centers exactly reproducible
        assert_eq!(dom.grid.center(0)[0], -0.75);
        assert_eq!(dom.grid.center(3)[0], 0.75);
    }

    #[test]
    fn disk_measure_close_to_pi() {
        let dom = build_domain(&Shape::Disk { radius: 1.0 }, 64).unwrap();
        let err = (dom.measure() - std::f64::consts::PI).abs() / std::f64::consts::PI;
        assert!(err < 0.05, "disk measure off by {err}");
    }

    #[test]
    fn thin_annulus_too_coarse_is_empty() {
        // box side 2(b+1)=6, n=4 -> h=1.5: no center radius falls in (2,3)
        let err = build_domain(&Shape::Annulus { b: 2.0 }, 4).unwrap_err();
        match err {
            Error::EmptyDomain { resolution, .. } => assert_eq!(resolution, 4),
            other => panic!("expected EmptyDomain, got {other}"),
        }
    }

    #[test]
    fn empty_mask_measure_zero() {
        let dom = build_domain(&Shape::Interval { a: -1.0, b: 1.0 }, 4).unwrap();
        let cfg = Configuration::empty(&dom);
        assert_eq!(cfg.measure(), 0.0);
    }

    #[test]
    fn full_square_measure() {
        let dom = build_domain(
            &Shape::Rectangle {
                width: 2.0,
                height: 2.0,
            },
            64,
        )
        .unwrap();
        assert!((dom.measure() - 4.0).abs() <= dom.grid.cell_volume());
    }

    #[test]
    fn monotone_under_inclusion() {
        let small = build_domain(&Shape::Disk { radius: 0.5 }, 64).unwrap();
        // same grid: embed the small disk in the big disk's box by comparing counts
        // of centers satisfying each predicate on the big grid
        let big = build_domain(&Shape::Disk { radius: 1.0 }, 64).unwrap();
        let mut small_on_big = 0usize;
        for &idx in big.inside_cells() {
            let [x, y] = big.grid.center(idx);
            if x * x + y * y < 0.25 {
                small_on_big += 1;
            }
        }
        assert!(small_on_big <= big.inside_count());
        assert!(small.measure() > 0.0);
    }

    #[test]
    fn build_is_deterministic() {
        let a = build_domain(&Shape::Annulus { b: 2.0 }, 48).unwrap();
        let b = build_domain(&Shape::Annulus { b: 2.0 }, 48).unwrap();
        assert_eq!(a.inside, b.inside);
    }

    #[test]
    fn annulus_radii_span_width() {
        let dom = build_domain(&Shape::Annulus { b: 2.0 }, 96).unwrap();
        let h = dom.grid.h;
        let radii: Vec<f64> = dom
            .inside_cells()
            .iter()
            .map(|&i| {
                let [x, y] = dom.grid.center(i);
                x.hypot(y)
            })
            .collect();
        let rmin = radii.iter().cloned().fold(f64::INFINITY, f64::min);
        let rmax = radii.iter().cloned().fold(0.0f64, f64::max);
        assert!(rmin <= 2.0 + 2.0 * h, "rmin={rmin}");
        assert!(rmax >= 3.0 - 2.0 * h, "rmax={rmax}");
    }

    #[test]
    fn sector_is_angular_slice() {
        let ann = build_domain(&Shape::Annulus { b: 1.0 }, 48).unwrap();
        let sec = build_domain(
            &Shape::Sector {
                b: 1.0,
                n_sector: 2,
            },
            48,
        )
        .unwrap();
        assert!(sec.inside_count() < ann.inside_count());
        for &idx in sec.inside_cells() {
            assert!(ann.inside[idx], "sector cell outside annulus");
            let [x, y] = sec.grid.center(idx);
            let th = y.atan2(x);
            assert!((0.0..=std::f64::consts::PI / 2.0).contains(&th));
        }
    }

    #[test]
    fn rle_roundtrip() {
        let dom = build_domain(&Shape::Disk { radius: 1.0 }, 16).unwrap();
        let mut cells = vec![false; dom.grid.cells()];
        for &i in dom.inside_cells().iter().step_by(3) {
            cells[i] = true;
        }
        let cfg = Configuration::new(cells.clone(), &dom, 0.1).unwrap();
        let rle = cfg.to_rle();
        let back = Configuration::from_rle(&rle, &dom, 0.1).unwrap();
        assert_eq!(back.cells, cells);
    }

    #[test]
    fn configuration_rejects_outside_cells() {
        let dom = build_domain(&Shape::Disk { radius: 1.0 }, 16).unwrap();
        let mut cells = vec![false; dom.grid.cells()];
        cells[0] = true; // box corner, outside the disk
        assert!(Configuration::new(cells, &dom, 0.0).is_err());
    }
}
