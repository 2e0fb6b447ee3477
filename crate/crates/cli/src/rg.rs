//! The line-oriented `.rg` resolution-graph format.
//!
//! ```text
//! graph id=g3f2a...
//! ambient d=2
//! source f="x1^3 - x2^2"
//! divisor id=E1 N=2 nu=2 kind=exceptional
//! chart id=C1 map="y1;y1*y2" visible="E1:y1;S1:y2 - 1"
//! intersect E1 S1 chart=C1 point=0,1
//! intersect E3 S2 chart=C4 locus="y1;y2^2 + 1"
//! stratum I=E1,S1 class=E1.S1 cover=1 unit="-1" chart=C1
//! blowup new=E1 through=
//! warning 'text'
//! ```
//!
//! Only `ambient` and `divisor` lines are required. Chart-side polynomials
//! (maps, visible equations, loci, units) use the variables `y1 .. yd`; the
//! source uses `x1 .. xd`. When a file has no `stratum` lines the strata are
//! derived from the divisors and intersections.

use std::fmt::Write as _;
use std::str::FromStr;

use hijac_core::poly::{parse_poly_with, Polynomial, Rational, Substitution};
use hijac_core::resolve::{
    Blowup, Chart, DivisorKind, DivisorRecord, Intersection, Locus, ResolutionGraph, Stratum,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct RgError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> RgError {
    RgError {
        line,
        message: message.into(),
    }
}

fn chart_poly(p: &Polynomial) -> String {
    p.to_text("y")
}

fn join_polys(ps: &[Polynomial]) -> String {
    ps.iter().map(chart_poly).collect::<Vec<_>>().join(";")
}

/// Serialize a graph. The output is deterministic and [`read`] parses it
/// back to an equal graph.
pub fn write(g: &ResolutionGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph id={}", g.id);
    let _ = writeln!(s, "ambient d={}", g.ambient_dim);
    if let Some(f) = &g.source {
        let _ = writeln!(s, "source f=\"{f}\"");
    }
    for d in &g.divisors {
        let _ = writeln!(
            s,
            "divisor id={} N={} nu={} kind={}",
            d.id,
            d.n,
            d.nu,
            d.kind.as_str()
        );
    }
    for c in &g.charts {
        let visible: Vec<String> = c
            .visible
            .iter()
            .map(|(id, eq)| format!("{id}:{}", chart_poly(eq)))
            .collect();
        let _ = writeln!(
            s,
            "chart id={} map=\"{}\" visible=\"{}\"",
            c.id,
            join_polys(c.map.images()),
            visible.join(";")
        );
    }
    for x in &g.intersections {
        let _ = write!(s, "intersect {} {}", x.a, x.b);
        if let Some(c) = &x.chart {
            let _ = write!(s, " chart={c}");
        }
        match &x.locus {
            Some(Locus::Point(a, b)) => {
                let _ = write!(s, " point={a},{b}");
            }
            Some(Locus::Ideal(gens)) => {
                let _ = write!(s, " locus=\"{}\"", join_polys(gens));
            }
            None => {}
        }
        s.push('\n');
    }
    for st in &g.strata {
        let unit = st.unit.as_ref().map(chart_poly).unwrap_or_default();
        let _ = write!(
            s,
            "stratum I={} class={} cover={} unit=\"{unit}\"",
            st.ids.join(","),
            st.class,
            st.cover
        );
        if let Some(c) = &st.chart {
            let _ = write!(s, " chart={c}");
        }
        s.push('\n');
    }
    for b in &g.blowups {
        let _ = writeln!(s, "blowup new={} through={}", b.new, b.through.join(","));
    }
    for w in &g.warnings {
        let quoted = shlex::try_quote(w).map(|q| q.into_owned()).unwrap_or_else(|_| w.replace('\0', ""));
        let _ = writeln!(s, "warning {quoted}");
    }
    s
}

struct Fields {
    line: usize,
    positional: Vec<String>,
    named: Vec<(String, String)>,
}

impl Fields {
    fn parse(line: usize, words: Vec<String>) -> Self {
        let mut positional = Vec::new();
        let mut named = Vec::new();
        for w in words {
            match w.split_once('=') {
                Some((k, v)) => named.push((k.to_string(), v.to_string())),
                None => positional.push(w),
            }
        }
        Fields {
            line,
            positional,
            named,
        }
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.named
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn need(&self, key: &str) -> Result<&str, RgError> {
        self.get(key)
            .ok_or_else(|| err(self.line, format!("missing {key}=")))
    }

    fn int(&self, key: &str) -> Result<u64, RgError> {
        let v = self.need(key)?;
        v.parse()
            .map_err(|_| err(self.line, format!("{key}={v} is not a non-negative integer")))
    }
}

fn poly(line: usize, text: &str, d: usize, prefix: &str) -> Result<Polynomial, RgError> {
    parse_poly_with(text, d, prefix).map_err(|e| err(line, format!("`{text}`: {e}")))
}

fn polys(line: usize, text: &str, d: usize) -> Result<Vec<Polynomial>, RgError> {
    text.split(';').map(|p| poly(line, p, d, "y")).collect()
}

fn rational(line: usize, text: &str) -> Result<Rational, RgError> {
    Rational::from_str(text.trim()).map_err(|_| err(line, format!("`{text}` is not a rational number")))
}

fn ids(text: &str) -> Vec<String> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// Parse a graph. Without a `graph id=` line the id is derived from the
/// source polynomial, or is `"g"` when there is none.
pub fn read(text: &str) -> Result<ResolutionGraph, RgError> {
    let mut id = None;
    let mut d = None;
    let mut g = ResolutionGraph::empty(String::new(), 0);
    let mut has_strata = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let words = shlex::split(trimmed).ok_or_else(|| err(line, "unbalanced quotes"))?;
        let (head, rest) = words.split_first().expect("nonempty line");
        if head == "warning" {
            g.warnings.push(rest.join(" "));
            continue;
        }
        let f = Fields::parse(line, rest.to_vec());
        let dim = |d: Option<usize>| d.ok_or_else(|| err(line, "`ambient d=` must come first"));
        match head.as_str() {
            "graph" => id = Some(f.need("id")?.to_string()),
            "ambient" => {
                let v = f.int("d")? as usize;
                if v == 0 {
                    return Err(err(line, "ambient dimension must be positive"));
                }
                d = Some(v);
            }
            "source" => g.source = Some(poly(line, f.need("f")?, dim(d)?, "x")?),
            "divisor" => {
                let kind = match f.need("kind")? {
                    "exceptional" => DivisorKind::Exceptional,
                    "strict" => DivisorKind::Strict,
                    other => return Err(err(line, format!("unknown kind {other}"))),
                };
                g.divisors.push(DivisorRecord {
                    id: f.need("id")?.to_string(),
                    n: f.int("N")?,
                    nu: f.int("nu")?,
                    kind,
                });
            }
            "chart" => {
                let d = dim(d)?;
                let images = polys(line, f.need("map")?, d)?;
                if images.len() != d {
                    return Err(err(line, format!("map needs {d} images")));
                }
                let map = Substitution::new(images).map_err(|e| err(line, e.to_string()))?;
                let mut visible = Vec::new();
                for item in f.get("visible").unwrap_or("").split(';').filter(|s| !s.trim().is_empty()) {
                    let (name, eq) = item
                        .split_once(':')
                        .ok_or_else(|| err(line, format!("`{item}` is not <divisor>:<poly>")))?;
                    visible.push((name.trim().to_string(), poly(line, eq, d, "y")?));
                }
                g.charts.push(Chart {
                    id: f.need("id")?.to_string(),
                    map,
                    visible,
                });
            }
            "intersect" => {
                let [a, b] = &f.positional[..] else {
                    return Err(err(line, "intersect needs two divisor ids"));
                };
                let locus = match (f.get("point"), f.get("locus")) {
                    (Some(_), Some(_)) => return Err(err(line, "give point= or locus=, not both")),
                    (Some(p), None) => {
                        let (x, y) = p
                            .split_once(',')
                            .ok_or_else(|| err(line, "point needs two coordinates"))?;
                        Some(Locus::Point(rational(line, x)?, rational(line, y)?))
                    }
                    (None, Some(l)) => Some(Locus::Ideal(polys(line, l, dim(d)?)?)),
                    (None, None) => None,
                };
                g.intersections.push(Intersection {
                    a: a.clone(),
                    b: b.clone(),
                    chart: f.get("chart").map(str::to_string),
                    locus,
                });
            }
            "stratum" => {
                has_strata = true;
                let unit = match f.get("unit") {
                    None | Some("") => None,
                    Some(u) => Some(poly(line, u, dim(d)?, "y")?),
                };
                let members = ids(f.need("I")?);
                g.strata.push(Stratum {
                    class: f.get("class").map_or_else(|| members.join("."), str::to_string),
                    ids: members,
                    cover: f.int("cover")?,
                    unit,
                    chart: f.get("chart").map(str::to_string),
                });
            }
            "blowup" => g.blowups.push(Blowup {
                new: f.need("new")?.to_string(),
                through: ids(f.get("through").unwrap_or("")),
            }),
            other => return Err(err(line, format!("unknown record `{other}`"))),
        }
    }
    g.ambient_dim = d.ok_or_else(|| err(0, "missing `ambient d=` line"))?;
    validate(&g)?;
    if !has_strata {
        g.derive_strata();
    }
    g.id = match (id, &g.source) {
        (Some(id), _) => id,
        (None, Some(f)) => hijac_core::resolve::graph_id(f),
        (None, None) => "g".to_string(),
    };
    Ok(g)
}

fn validate(g: &ResolutionGraph) -> Result<(), RgError> {
    let known = |id: &str| g.divisor(id).is_some();
    for (i, d) in g.divisors.iter().enumerate() {
        if g.divisors[..i].iter().any(|e| e.id == d.id) {
            return Err(err(0, format!("divisor {} listed twice", d.id)));
        }
        if d.n == 0 {
            return Err(err(0, format!("divisor {} has N = 0", d.id)));
        }
    }
    for x in &g.intersections {
        for id in [&x.a, &x.b] {
            if !known(id) {
                return Err(err(0, format!("intersection mentions unknown divisor {id}")));
            }
        }
    }
    for s in &g.strata {
        if let Some(id) = s.ids.iter().find(|id| !known(id)) {
            return Err(err(0, format!("stratum mentions unknown divisor {id}")));
        }
    }
    for c in &g.charts {
        if let Some((id, _)) = c.visible.iter().find(|(id, _)| !known(id)) {
            return Err(err(0, format!("chart {} sees unknown divisor {id}", c.id)));
        }
    }
    Ok(())
}
