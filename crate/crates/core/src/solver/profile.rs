use super::{decide, Winner};
use crate::engine::{GameSpec, Variant};
use crate::error::{Error, Result};
use crate::graph::{k_domination_number, Graph, VertexSet};
use serde::Serialize;

/// Smallest number of cops that wins `variant` with visibility `ell`.
pub fn cop_number(g: &Graph, ell: u32, variant: Variant, budget: usize) -> Result<usize> {
    cop_number_with(g, ell, variant, budget, 1)
}

/// Like [`cop_number`] but starts counting at `from`; the caller vouches
/// that fewer cops lose.
pub fn cop_number_with(
    g: &Graph,
    ell: u32,
    variant: Variant,
    budget: usize,
    from: usize,
) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for k in from.max(1)..=g.n().max(1) {
        let spec = GameSpec::new(g, ell, k, variant)?;
        match decide(g, &spec, budget)? {
            Winner::Cops => return Ok(k),
            Winner::Robber => continue,
            Winner::Inconclusive => return Err(Error::BudgetExceeded { budget }),
        }
    }
    // a cop on every vertex always wins, so this is unreachable for n >= 1
    Ok(g.n())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileOptions {
    /// Visibility radii to evaluate; `None` means `0..=diameter`.
    pub ells: Option<Vec<u32>>,
    pub monotone: bool,
    pub delayed: bool,
    pub budget: usize,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            ells: None,
            monotone: false,
            delayed: false,
            budget: super::DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllEntry {
    pub ell: u32,
    /// Capture number with visibility `ell`.
    pub capture: usize,
    /// Seeing number with visibility `ell`.
    pub see: usize,
    pub monotone: Option<usize>,
    /// Minimum size of a set within distance `ell` of every vertex.
    pub domination: usize,
}

/// Upper bound on the capture number from a cop parked on a cut vertex:
/// one more than the worst component left after deleting its ℓ-ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutBound {
    pub ell: u32,
    pub vertex: usize,
    /// `None` when the ball covers the whole graph and no component is
    /// left, in which case the bound says nothing.
    pub bound: Option<usize>,
}

/// Cut-vertex bounds for every cut vertex of `g` at visibility `ell`.
pub fn cut_vertex_bounds(g: &Graph, ell: u32, budget: usize) -> Result<Vec<CutBound>> {
    let mut out = Vec::new();
    for v in g.cut_vertices() {
        let keep = VertexSet::full(g.n()).difference(&g.closed_ball(v, ell));
        let comps = g.components_within(&keep);
        let mut worst = None;
        for comp in comps {
            let c = cop_number(&g.induced(&comp), ell, Variant::Capture, budget)?;
            worst = Some(worst.map_or(c, |w: usize| w.max(c)));
        }
        out.push(CutBound {
            ell,
            vertex: v,
            bound: worst.map(|w| w + 1),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainViolation {
    pub rule: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub n: usize,
    pub radius: u32,
    pub diameter: u32,
    /// Classical (perfect information) cop number.
    pub classical: usize,
    pub zero_visibility: usize,
    pub entries: Vec<EllEntry>,
    pub time_delayed: Option<usize>,
    /// Domination number.
    pub gamma: usize,
    /// Cut-vertex bounds for each evaluated `ell >= 1`.
    pub cut_bounds: Vec<CutBound>,
    pub violations: Vec<ChainViolation>,
    /// Observations that are reported rather than treated as failures.
    pub flags: Vec<String>,
}

impl Profile {
    pub fn entry(&self, ell: u32) -> Option<&EllEntry> {
        self.entries.iter().find(|e| e.ell == ell)
    }

    /// Re-derives the inequality chains from the stored numbers.
    pub fn check(&self) -> Vec<ChainViolation> {
        let mut out = Vec::new();
        let mut fail = |rule: &str, detail: String| {
            out.push(ChainViolation {
                rule: rule.to_string(),
                detail,
            })
        };
        let c = self.classical;
        for e in &self.entries {
            let l = e.ell;
            if e.see > e.capture {
                fail(
                    "see<=capture",
                    format!("ell={l}: {} > {}", e.see, e.capture),
                );
            }
            if l >= 1 && e.see > e.domination {
                fail(
                    "see<=domination",
                    format!("ell={l}: {} > {}", e.see, e.domination),
                );
            }
            if e.capture < c {
                fail(
                    "capture>=classical",
                    format!("ell={l}: {} < {c}", e.capture),
                );
            }
            if l >= self.diameter && e.capture != c {
                fail(
                    "capture=classical beyond diameter",
                    format!("ell={l}: {} != {c}", e.capture),
                );
            }
            if l >= self.radius && e.see != 1 {
                fail("see=1 from the radius on", format!("ell={l}: {}", e.see));
            }
            if l == 0 && e.capture != self.zero_visibility {
                fail(
                    "capture at ell=0 is zero visibility",
                    format!("{} != {}", e.capture, self.zero_visibility),
                );
            }
            if let Some(m) = e.monotone {
                if m < e.capture {
                    fail("monotone>=capture", format!("ell={l}: {m} < {}", e.capture));
                }
            }
            if l >= 2 && e.see != e.capture && !(c <= e.capture && e.capture <= c + 1) {
                fail(
                    "shadow bound",
                    format!("ell={l}: see={} capture={} classical={c}", e.see, e.capture),
                );
            }
        }
        for w in self.entries.windows(2) {
            if w[1].ell > w[0].ell {
                if w[1].capture > w[0].capture {
                    fail(
                        "capture non-increasing",
                        format!("ell {}->{}", w[0].ell, w[1].ell),
                    );
                }
                if w[1].see > w[0].see {
                    fail(
                        "see non-increasing",
                        format!("ell {}->{}", w[0].ell, w[1].ell),
                    );
                }
            }
        }
        for b in &self.cut_bounds {
            if let (Some(bound), Some(e)) = (b.bound, self.entry(b.ell)) {
                if e.capture > bound {
                    fail(
                        "cut-vertex bound",
                        format!("ell={} vertex {}: {} > {bound}", b.ell, b.vertex, e.capture),
                    );
                }
            }
        }
        if let Some(t) = self.time_delayed {
            if t < c {
                fail("time-delayed>=classical", format!("{t} < {c}"));
            }
        }
        out
    }
}

/// Every cop number of `g` for the requested radii and variants, with the
/// inequality chains checked.
pub fn profile(g: &Graph, opts: &ProfileOptions) -> Result<Profile> {
    let m = g.metrics()?;
    let budget = opts.budget;
    let ells = opts
        .ells
        .clone()
        .unwrap_or_else(|| (0..=m.diameter).collect());
    let classical = cop_number(g, 0, Variant::Classical, budget)?;
    let zero_visibility = cop_number(g, 0, Variant::ZeroVis, budget)?;
    let mut entries = Vec::new();
    for &ell in &ells {
        let capture = cop_number(g, ell, Variant::Capture, budget)?;
        let see = cop_number(g, ell, Variant::See, budget)?;
        let monotone = if opts.monotone {
            Some(cop_number(g, ell, Variant::MonotoneCapture, budget)?)
        } else {
            None
        };
        entries.push(EllEntry {
            ell,
            capture,
            see,
            monotone,
            domination: if ell == 0 {
                g.n()
            } else {
                k_domination_number(g, ell)
            },
        });
    }
    let time_delayed = if opts.delayed {
        Some(cop_number(g, 0, Variant::TimeDelayed, budget)?)
    } else {
        None
    };
    let gamma = k_domination_number(g, 1);
    let mut cut_bounds = Vec::new();
    for &ell in ells.iter().filter(|&&l| l >= 1) {
        cut_bounds.extend(cut_vertex_bounds(g, ell, budget)?);
    }
    let mut p = Profile {
        n: g.n(),
        radius: m.radius,
        diameter: m.diameter,
        classical,
        zero_visibility,
        entries,
        time_delayed,
        gamma,
        cut_bounds,
        violations: Vec::new(),
        flags: Vec::new(),
    };
    p.violations = p.check();
    if let Some(t) = time_delayed {
        if t > gamma {
            p.flags.push(format!(
                "time-delayed number {t} exceeds domination number {gamma}"
            ));
        }
    }
    Ok(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSearch {
    pub found: Option<Graph>,
    /// Index of the witness in the candidate stream.
    pub found_at: Option<usize>,
    pub examined: usize,
    /// Candidates skipped because a solve ran out of budget.
    pub inconclusive: usize,
}

/// First candidate satisfying `predicate`, looking at no more than
/// `max_candidates` graphs. Budget overruns skip the candidate.
pub fn search_witness<I, P>(
    candidates: I,
    mut predicate: P,
    max_candidates: usize,
) -> Result<WitnessSearch>
where
    I: IntoIterator<Item = Graph>,
    P: FnMut(&Graph) -> Result<bool>,
{
    let mut out = WitnessSearch {
        found: None,
        found_at: None,
        examined: 0,
        inconclusive: 0,
    };
    for (i, g) in candidates.into_iter().take(max_candidates).enumerate() {
        out.examined += 1;
        match predicate(&g) {
            Ok(true) => {
                out.found = Some(g);
                out.found_at = Some(i);
                break;
            }
            Ok(false) => {}
            Err(Error::BudgetExceeded { .. }) => out.inconclusive += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
