//! Cleaning scripts for trees.

use super::builder::{children, descendants_at, rooted_height, subtree, Builder, Vibration};
use super::search::find_cleaning_script;
use crate::engine::{simulate_script, GameSpec, Script, Variant};
use crate::error::{Error, Result};
use crate::families::{subdivision_path, Recipe};
use crate::graph::Graph;
use crate::treerank::{self, RankCertificate};

/// State budget for the exact one-cop searches used on small subtrees.
const SUBTREE_BUDGET: usize = 2_000_000;

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Checks that `script` leaves no unseen robber position when sight wins.
pub fn verify_seeing(t: &Graph, ell: u32, script: &Script) -> Result<bool> {
    let spec = GameSpec::new(t, ell, script.cops(), Variant::See)?;
    Ok(simulate_script(t, &spec, script)?
        .seen_guaranteed_at
        .is_some())
}

/// Script for `⌈h/3⌉` cops (at least one) that sees the robber on a tree
/// with one-step visibility, `h` being the radius.
pub fn tree_one_visibility_script(t: &Graph) -> Result<Script> {
    require_tree(t)?;
    let m = t.metrics()?;
    let root = m.center[0];
    let k = (m.radius as usize).div_ceil(3).max(1);
    let mut b = Builder::new(t, k, root);
    let cops: Vec<usize> = (0..k).collect();
    clean_height(&mut b, t, &cops, root, None);
    Ok(b.finish())
}

/// Cleans the subtree at `r` (ℓ = 1) assuming its rooted height is at
/// most `3 * cops.len()`.
fn clean_height(b: &mut Builder, t: &Graph, cops: &[usize], r: usize, parent: Option<usize>) {
    let h = rooted_height(t, r, parent);
    let c0 = cops[0];
    if h <= 1 {
        b.go(&[(c0, r)]);
        return;
    }
    if h == 2 {
        b.go(&[(c0, r)]);
        for w in children(t, r, parent) {
            b.step(&[(c0, w)]);
            b.step(&[(c0, r)]);
        }
        return;
    }
    if cops.len() == 1 {
        // height three: the height-two walk below every child
        for w in children(t, r, parent) {
            b.go(&[(c0, w)]);
            for u in children(t, w, Some(r)) {
                b.step(&[(c0, u)]);
                b.step(&[(c0, w)]);
            }
        }
        return;
    }
    if h as usize <= 3 * (cops.len() - 1) {
        clean_height(b, t, &cops[1..], r, parent);
        return;
    }
    // one cop vibrates next to the gate of each depth-three subtree while
    // the others clean it
    let rest = &cops[1..];
    for x in children(t, r, parent) {
        b.go(&[(c0, x)]);
        for (y, p) in descendants_at(t, x, Some(r), 2) {
            b.push_guard(Vibration {
                cop: c0,
                home: x,
                away: p,
            });
            clean_height(b, t, rest, y, Some(p));
            b.pop_guard();
        }
    }
}

fn subtree_rank(t: &Graph, ell: u32, s: usize, parent: Option<usize>) -> Result<usize> {
    let verts = subtree(t, s, parent).to_vec();
    Ok(treerank::rank(&t.induced(&verts), ell)?.k)
}

/// Roots of the subtrees hanging `d` levels below `s` through child `x`,
/// with their parents.
fn gates(t: &Graph, s: usize, x: usize, d: u32) -> Vec<(usize, usize)> {
    if d == 1 {
        vec![(x, s)]
    } else {
        descendants_at(t, x, Some(s), d - 1)
    }
}

fn depth_fits(
    t: &Graph,
    ell: u32,
    s: usize,
    parent: Option<usize>,
    d: u32,
    cops: usize,
) -> Result<bool> {
    for (y, p) in descendants_at(t, s, parent, d) {
        if subtree_rank(t, ell, y, Some(p))? > cops {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `guard` vibrates between `s` and each child in turn while `rest` clean
/// the subtrees `depth` levels below `s`.
#[allow(clippy::too_many_arguments)]
fn guard_and_clean(
    b: &mut Builder,
    t: &Graph,
    ell: u32,
    guard: usize,
    rest: &[usize],
    s: usize,
    parent: Option<usize>,
    depth: u32,
) -> Result<()> {
    b.go(&[(guard, s)]);
    for x in children(t, s, parent) {
        let targets = gates(t, s, x, depth);
        if targets.is_empty() || rest.is_empty() {
            b.go(&[(guard, x)]);
            continue;
        }
        b.push_guard(Vibration {
            cop: guard,
            home: s,
            away: x,
        });
        for (y, p) in targets {
            clean_rooted(b, t, ell, rest, y, Some(p))?;
        }
        b.pop_guard();
    }
    Ok(())
}

/// Cleans the subtree at `s` with the given cops, assuming the robber
/// cannot leave it unseen.
fn clean_rooted(
    b: &mut Builder,
    t: &Graph,
    ell: u32,
    cops: &[usize],
    s: usize,
    parent: Option<usize>,
) -> Result<()> {
    let h = rooted_height(t, s, parent);
    if h <= ell {
        b.go(&[(cops[0], s)]);
        return Ok(());
    }
    let need = subtree_rank(t, ell, s, parent)?;
    if need > cops.len() {
        return Err(Error::Precondition(format!(
            "subtree at {s} needs {need} cops, {} available",
            cops.len()
        )));
    }
    if need == 1 {
        return clean_one_cop(b, t, ell, cops[0], s, parent);
    }
    let cops = &cops[..need];
    let depth = (1..=ell + 1)
        .find(|&d| depth_fits(t, ell, s, parent, d, need - 1).unwrap_or(false))
        .ok_or_else(|| {
            Error::Precondition(format!("no guard depth works for the subtree at {s}"))
        })?;
    guard_and_clean(b, t, ell, cops[0], &cops[1..], s, parent, depth)
}

fn clean_one_cop(
    b: &mut Builder,
    t: &Graph,
    ell: u32,
    cop: usize,
    s: usize,
    parent: Option<usize>,
) -> Result<()> {
    let region = subtree(t, s, parent);
    let verts = region.to_vec();
    let far = verts
        .iter()
        .copied()
        .max_by_key(|&w| (t.dist(s, w), usize::MAX - w))
        .unwrap_or(s);
    let is_path = verts.len() as u32 == t.dist(s, far) + 1;
    if is_path {
        // sweep from the gate toward the far end
        let h = t.dist(s, far);
        let stop = t.geodesic(s, far)[(h - ell.min(h)) as usize];
        b.go(&[(cop, s)]);
        b.go(&[(cop, stop)]);
        return Ok(());
    }
    let sub = t.induced(&verts);
    let found = find_cleaning_script(&sub, ell, 1, false, SUBTREE_BUDGET)?
        .script
        .ok_or_else(|| Error::Precondition(format!("no one-cop cleaning of the subtree at {s}")))?;
    let walk: Vec<usize> = found.walks[0].iter().map(|&i| verts[i]).collect();
    // reach the start through the gate so nothing slips past
    b.go(&[(cop, s)]);
    b.play(&[cop], &Script::new(vec![walk]));
    Ok(())
}

/// Which guarantee a root-guarded script keeps for the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootGuard {
    /// A cop stands on the root at least every second round.
    Occupied,
    /// The root is within some cop's ball at least every second round.
    Seen,
}

/// Script for `k - 1` cops cleaning the tree rooted at `root` while
/// keeping the root guarded. With [`RootGuard::Occupied`], every subtree
/// hanging at some depth `j <= ℓ+1` must need at most `k - 2` cops; with
/// [`RootGuard::Seen`], the same at some depth `i <= 2ℓ+1`.
pub fn root_guarded_script(
    t: &Graph,
    root: usize,
    k: usize,
    ell: u32,
    mode: RootGuard,
) -> Result<Script> {
    require_tree(t)?;
    if root >= t.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: t.n(),
        });
    }
    if k < 2 {
        return Err(Error::Precondition(
            "root-guarded cleaning needs k >= 2".into(),
        ));
    }
    let cleaners: Vec<usize> = (1..k - 1).collect();
    let max_depth = match mode {
        RootGuard::Occupied => ell + 1,
        RootGuard::Seen => 2 * ell + 1,
    };
    let mut depth = None;
    for d in 1..=max_depth {
        if depth_fits(t, ell, root, None, d, k - 2)? {
            depth = Some(d);
            break;
        }
    }
    let depth = depth.ok_or_else(|| {
        Error::Precondition(format!(
            "subtrees below the root need more than {} cops",
            k - 2
        ))
    })?;
    let mut b = Builder::new(t, k - 1, root);
    b.place(0, root);
    let (upper, lower) = match mode {
        RootGuard::Occupied => (0, depth),
        RootGuard::Seen => (depth / 2, depth - depth / 2),
    };
    if upper == 0 {
        guard_and_clean(&mut b, t, ell, 0, &cleaners, root, None, lower)?;
    } else {
        for (s, p) in descendants_at(t, root, None, upper) {
            b.go(&[(0, root)]);
            guard_and_clean(&mut b, t, ell, 0, &cleaners, s, Some(p), lower)?;
        }
        b.go(&[(0, root)]);
    }
    Ok(b.finish())
}

/// Script for `cert.k` cops on a tree containing the certified member of
/// the rank family: one cop vibrates at the gate of each branch while the
/// others clean the branch's smaller member.
pub fn t_family_script(t: &Graph, ell: u32, cert: Option<&RankCertificate>) -> Result<Script> {
    let cert = cert.ok_or_else(|| Error::Precondition("missing rank certificate".into()))?;
    if !treerank::verify_certificate(t, ell, cert) {
        return Err(Error::Precondition(
            "certificate does not match the tree".into(),
        ));
    }
    let mut b = Builder::new(t, cert.k, cert.q);
    let cops: Vec<usize> = (0..cert.k).collect();
    family_rec(&mut b, ell, &cops, cert);
    Ok(b.finish())
}

fn family_rec(b: &mut Builder, ell: u32, cops: &[usize], cert: &RankCertificate) {
    let c = cops[0];
    if cert.branches.is_empty() {
        b.go(&[(c, cert.q)]);
        return;
    }
    for br in &cert.branches {
        let x = if ell == 0 {
            cert.q
        } else {
            br.path[ell as usize - 1]
        };
        let y = br.path[ell as usize];
        b.go(&[(c, x)]);
        b.push_guard(Vibration {
            cop: c,
            home: x,
            away: y,
        });
        family_rec(b, ell, &cops[1..], &br.child);
        b.pop_guard();
    }
}

/// The two cleaning scripts on the depth-three binary tree with every
/// edge subdivided `2ℓ+1` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TEllScripts {
    /// Two cops; b is recontaminated.
    pub two_cop: Script,
    /// Three cops; the unseen territory never grows.
    pub three_cop_monotone: Script,
}

pub fn t_ell_scripts(t: &Graph, ell: u32) -> Result<TEllScripts> {
    if ell == 0 {
        return Err(Error::Precondition(
            "the subdivided-tree scripts need ℓ >= 1".into(),
        ));
    }
    let s = 2 * ell as usize + 1;
    let expected = Recipe::SubdividedBinary {
        depth: 3,
        subdivisions: s,
    }
    .generate()?
    .graph;
    if expected != *t {
        return Err(Error::Precondition(format!(
            "expected the depth-3 binary tree subdivided {s} times in generator layout"
        )));
    }
    let path = |child: usize| subdivision_path(3, s, child);
    // vertex ℓ above the leaf `leaf`, on its edge path
    let above_leaf = |leaf: usize| path(leaf)[ell as usize + 1];
    let (r, a, a2, a_l, b_, a2_l, b2) = (0, 1, 2, 3, 4, 5, 6);
    let (v_l, v_l1) = (path(b_)[ell as usize - 1], path(b_)[ell as usize]);
    let (w_l, w_l1) = (path(a2_l)[ell as usize - 1], path(a2_l)[ell as usize]);

    let two_cop = {
        let mut bl = Builder::new(t, 2, r);
        bl.place(0, 7);
        bl.place(1, 8);
        bl.go(&[(0, a_l), (1, a_l)]);
        bl.go(&[(0, a), (1, a)]);
        bl.push_guard(Vibration {
            cop: 0,
            home: v_l,
            away: v_l1,
        });
        bl.go(&[(1, above_leaf(9))]);
        bl.go(&[(1, above_leaf(10))]);
        bl.pop_guard();
        bl.go(&[(0, r), (1, r)]);
        bl.go(&[(0, a2), (1, a2)]);
        bl.push_guard(Vibration {
            cop: 0,
            home: w_l,
            away: w_l1,
        });
        bl.go(&[(1, above_leaf(11))]);
        bl.go(&[(1, above_leaf(12))]);
        bl.pop_guard();
        bl.go(&[(0, b2), (1, b2)]);
        bl.go(&[(0, above_leaf(13)), (1, above_leaf(14))]);
        bl.finish()
    };

    let three_cop_monotone = {
        let mut bl = Builder::new(t, 3, r);
        bl.place(0, 7);
        bl.place(1, 8);
        bl.place(2, 7);
        bl.go(&[(0, a_l), (1, a_l), (2, a_l)]);
        bl.go(&[(0, a), (1, a), (2, a)]);
        bl.go(&[(1, b_), (2, b_)]);
        bl.go(&[(1, above_leaf(9))]);
        bl.go(&[(1, above_leaf(10))]);
        bl.go(&[(0, r), (1, r), (2, r)]);
        bl.go(&[(0, a2), (1, a2), (2, a2)]);
        bl.go(&[(1, a2_l), (2, a2_l)]);
        bl.go(&[(1, above_leaf(11))]);
        bl.go(&[(1, above_leaf(12))]);
        bl.go(&[(1, b2), (2, b2)]);
        bl.go(&[(1, above_leaf(13))]);
        bl.go(&[(1, above_leaf(14))]);
        bl.finish()
    };
    Ok(TEllScripts {
        two_cop,
        three_cop_monotone,
    })
}

/// Cleaning script for a tree with as many cops as its rank, trying each
/// root in turn for the guard-and-descend construction. Every candidate
/// is checked by simulation before it is returned.
pub fn rank_cleaning_script(t: &Graph, ell: u32) -> Result<Script> {
    require_tree(t)?;
    let k = treerank::rank(t, ell)?.k;
    let cops: Vec<usize> = (0..k).collect();
    let mut roots: Vec<usize> = (0..t.n()).collect();
    roots.sort_by_key(|&v| (t.eccentricity(v), v));
    for root in roots {
        let mut b = Builder::new(t, k, root);
        if clean_rooted(&mut b, t, ell, &cops, root, None).is_err() {
            continue;
        }
        let script = b.finish();
        if verify_seeing(t, ell, &script)? {
            return Ok(script);
        }
    }
    Err(Error::Precondition(format!(
        "no guard-and-descend script with {k} cops"
    )))
}
