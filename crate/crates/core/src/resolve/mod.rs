//! Embedded resolution of plane-curve germs at the origin by point blowups.
//!
//! Chart coordinates are `y1, y2`; every chart records the composed map back
//! to the root coordinates `x1, x2` and the local equations of the divisors
//! it sees. Exceptional divisors are named `E1, E2, ..` in creation order and
//! strict-transform branches `S1, S2, ..` in discovery order.

mod covering;
mod curve;
mod separate;
mod univariate;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::poly::{PolyError, Polynomial, Rational, Substitution};

pub use covering::{
    compare_coverings, covering_units, verify_pullback_orders, Comparison, CoveringCertificate,
};
pub use curve::{resolve_curve, squarefree_decomposition};
pub use separate::m_separate;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("cannot resolve the zero polynomial")]
    ZeroPolynomial,
    #[error("f does not vanish at the origin")]
    NotAtOrigin,
    #[error("curve resolution needs 2 variables, got {0}")]
    NotPlaneCurve(usize),
    #[error("non-rational blowup center on {divisor}: a root of {poly}")]
    NonRationalCenter { divisor: String, poly: String },
    #[error("coefficients too large to search for rational roots")]
    CoefficientsTooLarge,
    #[error("unknown chart {0}")]
    MissingChart(String),
    #[error("divisor {divisor} is not visible in chart {chart}")]
    NotVisible { divisor: String, chart: String },
    #[error("unknown divisor {0}")]
    UnknownDivisor(String),
    #[error("graph has no source polynomial")]
    MissingSource,
    #[error("pullback is not divisible by the monomial part on stratum {0}")]
    UnitDivision(String),
    #[error("intersection {0} is not a transversal crossing of smooth branches")]
    NotSnc(String),
    #[error("blowup sequences differ: {0}")]
    DifferentSequences(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivisorKind {
    Exceptional,
    Strict,
}

impl DivisorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DivisorKind::Exceptional => "exceptional",
            DivisorKind::Strict => "strict",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorRecord {
    pub id: String,
    /// Order of vanishing of the pulled-back function along the divisor.
    pub n: u64,
    /// One plus the discrepancy.
    pub nu: u64,
    pub kind: DivisorKind,
}

/// Where two divisors meet inside a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locus {
    /// A single rational point in chart coordinates.
    Point(Rational, Rational),
    /// The zero set of these polynomials (a Galois orbit of points).
    Ideal(Vec<Polynomial>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub a: String,
    pub b: String,
    pub chart: Option<String>,
    pub locus: Option<Locus>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub ids: Vec<String>,
    pub class: String,
    /// `N_I`, the gcd of the multiplicities in `ids`.
    pub cover: u64,
    /// `u` with `h*f = u * prod eq_i^{N_i}` on `chart`.
    pub unit: Option<Polynomial>,
    pub chart: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub id: String,
    /// Images of the root coordinates in the chart coordinates.
    pub map: Substitution,
    /// Local equations of the divisors visible in the chart.
    pub visible: Vec<(String, Polynomial)>,
}

impl Chart {
    pub fn equation(&self, id: &str) -> Option<&Polynomial> {
        self.visible.iter().find(|(d, _)| d == id).map(|(_, p)| p)
    }
}

/// One point blowup: the new divisor and the divisors through its center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub new: String,
    pub through: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionGraph {
    /// Identifies the function the graph was built for; class symbols of
    /// different graphs never compare equal without a certificate.
    pub id: String,
    pub ambient_dim: usize,
    pub source: Option<Polynomial>,
    pub divisors: Vec<DivisorRecord>,
    pub intersections: Vec<Intersection>,
    pub strata: Vec<Stratum>,
    pub charts: Vec<Chart>,
    pub blowups: Vec<Blowup>,
    pub warnings: Vec<String>,
}

/// Stable identifier of a polynomial: FNV-1a of its canonical text.
pub fn graph_id(f: &Polynomial) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in f.to_text("x").bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("g{h:016x}")
}

impl ResolutionGraph {
    pub fn empty(id: String, ambient_dim: usize) -> Self {
        ResolutionGraph {
            id,
            ambient_dim,
            source: None,
            divisors: Vec::new(),
            intersections: Vec::new(),
            strata: Vec::new(),
            charts: Vec::new(),
            blowups: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn divisor(&self, id: &str) -> Option<&DivisorRecord> {
        self.divisors.iter().find(|d| d.id == id)
    }

    pub fn chart(&self, id: &str) -> Option<&Chart> {
        self.charts.iter().find(|c| c.id == id)
    }

    fn position(&self, id: &str) -> usize {
        self.divisors
            .iter()
            .position(|d| d.id == id)
            .unwrap_or(usize::MAX)
    }

    pub fn exceptional(&self) -> impl Iterator<Item = &DivisorRecord> {
        self.divisors
            .iter()
            .filter(|d| d.kind == DivisorKind::Exceptional)
    }

    pub fn strict(&self) -> impl Iterator<Item = &DivisorRecord> {
        self.divisors
            .iter()
            .filter(|d| d.kind == DivisorKind::Strict)
    }

    pub fn multiplicity(&self, id: &str) -> Result<u64, ResolveError> {
        self.divisor(id)
            .map(|d| d.n)
            .ok_or_else(|| ResolveError::UnknownDivisor(String::from(id)))
    }

    /// Whether `N_i + N_j > m` for every pair of meeting divisors.
    pub fn is_m_separating(&self, m: u64) -> bool {
        self.intersections.iter().all(|x| {
            let n = |id: &str| self.divisor(id).map_or(0, |d| d.n);
            n(&x.a) + n(&x.b) > m
        })
    }

    /// Stratum records for every divisor and every intersection, without
    /// units. A divisor's stratum lives on the first chart that sees it, an
    /// intersection's on the chart where the crossing was recorded.
    pub fn derive_strata(&mut self) {
        let mut strata = Vec::new();
        for d in &self.divisors {
            let home = self.charts.iter().find(|c| c.equation(&d.id).is_some());
            strata.push(Stratum {
                ids: alloc::vec![d.id.clone()],
                class: d.id.clone(),
                cover: d.n,
                unit: None,
                chart: home.map(|c| c.id.clone()),
            });
        }
        for x in &self.intersections {
            let (na, nb) = (
                self.divisor(&x.a).map_or(0, |d| d.n),
                self.divisor(&x.b).map_or(0, |d| d.n),
            );
            strata.push(Stratum {
                ids: alloc::vec![x.a.clone(), x.b.clone()],
                class: format!("{}.{}", x.a, x.b),
                cover: na.gcd(&nb),
                unit: None,
                chart: x.chart.clone(),
            });
        }
        self.strata = strata;
    }

    /// Sort intersections and strata by divisor creation order.
    pub fn canonicalize(&mut self) {
        let pos: Vec<(String, usize)> = self
            .divisors
            .iter()
            .enumerate()
            .map(|(i, d)| (d.id.clone(), i))
            .collect();
        let at = |id: &str| {
            pos.iter()
                .find(|(d, _)| d == id)
                .map_or(usize::MAX, |p| p.1)
        };
        for x in &mut self.intersections {
            if at(&x.a) > at(&x.b) {
                core::mem::swap(&mut x.a, &mut x.b);
            }
        }
        self.intersections.sort_by_key(|x| (at(&x.a), at(&x.b)));
        for s in &mut self.strata {
            s.ids.sort_by_key(|id| at(id));
        }
        self.strata.sort_by_cached_key(|s| {
            (
                s.ids.len(),
                s.ids.iter().map(|id| at(id)).collect::<Vec<_>>(),
            )
        });
    }

    /// Register a chart, reusing an existing one with the same map.
    pub(crate) fn attach_chart(
        &mut self,
        map: Substitution,
        visible: Vec<(String, Polynomial)>,
    ) -> String {
        let idx = match self.charts.iter().position(|c| c.map == map) {
            Some(i) => i,
            None => {
                let mut k = self.charts.len() + 1;
                while self.chart(&format!("C{k}")).is_some() {
                    k += 1;
                }
                self.charts.push(Chart {
                    id: format!("C{k}"),
                    map,
                    visible: Vec::new(),
                });
                self.charts.len() - 1
            }
        };
        for (id, eq) in visible {
            if self.charts[idx].equation(&id).is_none() {
                self.charts[idx].visible.push((id, eq));
            }
        }
        let mut vis = core::mem::take(&mut self.charts[idx].visible);
        vis.sort_by_key(|(id, _)| self.position(id));
        self.charts[idx].visible = vis;
        self.charts[idx].id.clone()
    }

    /// Smallest `E{k}` not yet used.
    pub(crate) fn fresh_exceptional_id(&self) -> String {
        let mut k = self.exceptional().count() + 1;
        while self.divisor(&format!("E{k}")).is_some() {
            k += 1;
        }
        format!("E{k}")
    }
}

impl fmt::Display for ResolutionGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} (d = {})", self.id, self.ambient_dim)?;
        for d in &self.divisors {
            writeln!(
                f,
                "  {} {}: N = {}, nu = {}",
                d.kind.as_str(),
                d.id,
                d.n,
                d.nu
            )?;
        }
        for x in &self.intersections {
            writeln!(f, "  {} meets {}", x.a, x.b)?;
        }
        Ok(())
    }
}
