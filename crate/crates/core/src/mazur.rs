//! Projection-equality checks between section polytopes and their Levi
//! projections, the combinatorial heart of the converse-to-Mazur
//! statements.
//!
//! For a positive orthogonal set with hull P and a Levi projection pr_M,
//! the check compares pr_M(P intersect X) against pr_M(P) intersect
//! pr_M(X). The left side always sits inside the right side; `equal`
//! records whether the containment is onto, and `witnesses` lists the
//! unreached points. Batch Levis are verified two ways: a direct
//! enumeration of the projected polytope (exact Fourier-Motzkin
//! elimination of the fiber directions) and a staged chain of rank-one
//! checks that walks down to smaller GL fans by merging the averaged
//! coordinate pairs.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cohomology::CohomologyReport;
use crate::cohomology::{
    h0_points, phi_cokernel, phi_cokernel_with_oracle, projected_h0_points, LatticePointSet,
    LatticeTag,
};
use crate::divisor::OrthogonalSet;
use crate::error::Error;
use crate::fan::Variety;
use crate::linalg::Rat;
use crate::root_system::{Character, GroupKind};

/// A Levi subgroup given either by consecutive coordinate batches
/// (GL(n)) or by a single root (the semisimple-rank-one case).
#[derive(Debug, Clone)]
pub enum LeviSpec {
    Batches(Vec<usize>),
    Root(Character),
}

/// Result of one projection-equality check.
#[derive(Debug, Clone)]
pub struct ProjectionReport {
    pub equal: bool,
    /// Projections of the section lattice points.
    pub lhs: LatticePointSet,
    /// Projected-lattice points of the projected hull.
    pub rhs: LatticePointSet,
    /// rhs points missed by lhs.
    pub witnesses: Vec<Character>,
}

/// The lattice points of Conv(W mu) congruent to mu modulo the root
/// lattice. `mu` must be dominant.
pub fn compute_p_mu(variety: &Arc<Variety>, mu: &Character) -> Result<LatticePointSet, Error> {
    if !variety.datum.is_dominant(mu)? {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let os = OrthogonalSet::from_weyl_orbit(variety, mu)?;
    let hull = h0_points(&os)?;
    let mut points = Vec::new();
    for nu in hull.points {
        if variety.datum.in_root_lattice(&nu.sub(mu))? {
            points.push(nu);
        }
    }
    Ok(LatticePointSet {
        points,
        tag: LatticeTag::Full,
    })
}

/// Check pr_M(Conv(x_B) cap X) = Conv(x_P) cap pr_M(X) for a valid
/// positive orthogonal set.
pub fn verify_projection_equality(
    os: &OrthogonalSet,
    spec: &LeviSpec,
) -> Result<ProjectionReport, Error> {
    match spec {
        LeviSpec::Root(alpha) => rank_one_report(os, alpha),
        LeviSpec::Batches(batches) => batch_report(os, batches),
    }
}

fn rank_one_report(os: &OrthogonalSet, alpha: &Character) -> Result<ProjectionReport, Error> {
    let datum = &os.variety().datum;
    let h0 = h0_points(os)?;
    let rhs = projected_h0_points(os, alpha)?;
    let image: BTreeSet<Character> = h0
        .points
        .iter()
        .map(|u| datum.project_along_root(u, alpha).expect("root"))
        .collect();
    debug_assert!(image.iter().all(|y| rhs.contains(y)));
    let witnesses: Vec<Character> = rhs
        .points
        .iter()
        .filter(|y| !image.contains(*y))
        .cloned()
        .collect();
    Ok(ProjectionReport {
        equal: witnesses.is_empty(),
        lhs: LatticePointSet {
            points: image.into_iter().collect(),
            tag: LatticeTag::Projected(alpha.clone()),
        },
        rhs,
        witnesses,
    })
}

fn batch_offsets(batches: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(batches.len());
    let mut pos = 0;
    for &b in batches {
        offsets.push(pos);
        pos += b;
    }
    offsets
}

/// The batch-averaged point with batch sums `m`.
fn batch_point(kind: GroupKind, batches: &[usize], m: &[i64]) -> Character {
    let mut coords = Vec::new();
    for (&k, &s) in batches.iter().zip(m) {
        let mean = Rat::new(s, k as i64);
        coords.extend(std::iter::repeat_n(mean, k));
    }
    Character::new(kind, coords)
}

fn batch_sums(u: &Character, batches: &[usize]) -> Vec<i64> {
    let offsets = batch_offsets(batches);
    batches
        .iter()
        .zip(&offsets)
        .map(|(&k, &off)| {
            let s: Rat = u.coords()[off..off + k].iter().copied().sum();
            debug_assert!(s.is_integer());
            s.to_integer()
        })
        .collect()
}

fn batch_report(os: &OrthogonalSet, batches: &[usize]) -> Result<ProjectionReport, Error> {
    let datum = &os.variety().datum;
    if datum.kind() != GroupKind::GLn {
        return Err(Error::InvalidDatum("batch Levi specs apply to GL:n".into()));
    }
    let n = datum.n();
    let total: usize = batches.iter().sum();
    if total != n || batches.contains(&0) {
        return Err(Error::BatchMismatch {
            expected: n,
            got: total,
        });
    }
    let kind = datum.kind();
    let h0 = h0_points(os)?;
    let lhs_sums: BTreeSet<Vec<i64>> = h0.points.iter().map(|u| batch_sums(u, batches)).collect();

    // H-description of the projected hull in batch-sum coordinates
    let rows = projected_hull_rows(os, batches);

    // candidate batch sums from the vertex sums
    let r = batches.len();
    let mut lo = vec![i64::MAX; r];
    let mut hi = vec![i64::MIN; r];
    for u in os.chars() {
        for (b, s) in batch_sums(u, batches).into_iter().enumerate() {
            lo[b] = lo[b].min(s);
            hi[b] = hi[b].max(s);
        }
    }
    let sum = os.common_sum();
    let mut rhs_sums: Vec<Vec<i64>> = Vec::new();
    for_each_box_point(&lo, &hi, sum, &mut |m| {
        let feasible = rows.iter().all(|(coef, b)| {
            let lhs: Rat = coef
                .iter()
                .zip(m)
                .fold(Rat::zero(), |acc, (c, &x)| acc + *c * Rat::from_integer(x));
            lhs <= *b
        });
        if feasible {
            rhs_sums.push(m.to_vec());
        }
    });

    debug_assert!(
        lhs_sums.iter().all(|m| rhs_sums.contains(m)),
        "projections of section points must satisfy the projected hull inequalities"
    );

    let witnesses: Vec<Character> = rhs_sums
        .iter()
        .filter(|m| !lhs_sums.contains(*m))
        .map(|m| batch_point(kind, batches, m))
        .collect();
    let lhs = LatticePointSet {
        points: lhs_sums
            .iter()
            .map(|m| batch_point(kind, batches, m))
            .collect(),
        tag: LatticeTag::Full,
    };
    let rhs = LatticePointSet {
        points: rhs_sums
            .iter()
            .map(|m| batch_point(kind, batches, m))
            .collect(),
        tag: LatticeTag::Full,
    };
    Ok(ProjectionReport {
        equal: witnesses.is_empty(),
        lhs,
        rhs,
        witnesses,
    })
}

fn for_each_box_point(lo: &[i64], hi: &[i64], sum: i64, f: &mut impl FnMut(&[i64])) {
    let n = lo.len();
    let mut point = vec![0i64; n];
    fn rec(
        i: usize,
        rem: i64,
        lo: &[i64],
        hi: &[i64],
        point: &mut Vec<i64>,
        f: &mut impl FnMut(&[i64]),
    ) {
        let n = lo.len();
        if i == n - 1 {
            if rem >= lo[n - 1] && rem <= hi[n - 1] {
                point[n - 1] = rem;
                f(point);
            }
            return;
        }
        let tail_lo: i64 = lo[i + 1..].iter().sum();
        let tail_hi: i64 = hi[i + 1..].iter().sum();
        for x in lo[i]..=hi[i] {
            let r = rem - x;
            if r < tail_lo || r > tail_hi {
                continue;
            }
            point[i] = x;
            rec(i + 1, r, lo, hi, point, f);
        }
    }
    rec(0, sum, lo, hi, &mut point, f);
}

/// Inequalities for membership of the batch-averaged point in the
/// projected hull, with the fiber directions eliminated exactly.
fn projected_hull_rows(os: &OrthogonalSet, batches: &[usize]) -> Vec<(Vec<Rat>, Rat)> {
    let fan = &os.variety().fan;
    let offsets = batch_offsets(batches);
    let r = batches.len();

    // fiber directions: e_j - e_{j+1} within each batch
    let mut dirs: Vec<(usize, usize)> = Vec::new();
    for (&k, &off) in batches.iter().zip(&offsets) {
        for t in 0..k.saturating_sub(1) {
            dirs.push((off + t, off + t + 1));
        }
    }
    let f = dirs.len();
    let coeffs = os.ray_coefficients();

    // rows over the variables (m_1..m_r, w_1..w_f)
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (ray, &a) in fan.rays.iter().zip(&coeffs) {
        let v = ray.coords();
        let mut coef = vec![Rat::zero(); r + f];
        for b in 0..r {
            let s: i64 = v[offsets[b]..offsets[b] + batches[b]].iter().sum();
            coef[b] = Rat::new(s, batches[b] as i64);
        }
        for (t, &(i, j)) in dirs.iter().enumerate() {
            coef[r + t] = Rat::from_integer(v[i] - v[j]);
        }
        rows.push((coef, Rat::from_integer(a)));
    }

    // eliminate the fiber variables back to front
    for var in (r..r + f).rev() {
        rows = fourier_motzkin_step(rows, var);
    }
    for (coef, _) in rows.iter_mut() {
        coef.truncate(r);
    }
    rows
}

fn fourier_motzkin_step(rows: Vec<(Vec<Rat>, Rat)>, var: usize) -> Vec<(Vec<Rat>, Rat)> {
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for row in rows {
        let c = row.0[var];
        if c.is_zero() {
            zero.push(row);
        } else if c.is_positive() {
            pos.push(normalize_on(row, var));
        } else {
            neg.push(normalize_on(row, var));
        }
    }
    let mut out: BTreeSet<(Vec<Rat>, Rat)> = zero.into_iter().map(dedupe_scale).collect();
    for p in &pos {
        for q in &neg {
            // p: x_var <= bp - rest_p ; q: x_var >= -(bq - rest_q)
            let coef: Vec<Rat> = p.0.iter().zip(&q.0).map(|(a, b)| *a + *b).collect();
            let b = p.1 + q.1;
            out.insert(dedupe_scale((coef, b)));
        }
    }
    out.into_iter().collect()
}

fn normalize_on(row: (Vec<Rat>, Rat), var: usize) -> (Vec<Rat>, Rat) {
    let c = row.0[var];
    let scale = if c.is_positive() { c } else { -c };
    (row.0.iter().map(|x| *x / scale).collect(), row.1 / scale)
}

fn dedupe_scale(row: (Vec<Rat>, Rat)) -> (Vec<Rat>, Rat) {
    let lead =
        row.0
            .iter()
            .find(|c| !c.is_zero())
            .copied()
            .map(|c| if c.is_negative() { -c } else { c });
    match lead {
        None => row,
        Some(s) => (row.0.iter().map(|c| *c / s).collect(), row.1 / s),
    }
}

/// The staged form of the batch check: repeatedly verify the rank-one
/// projection on the current fan, then project along that root and merge
/// the averaged pair, walking GL(n) down to the Levi. Returns the overall
/// verdict and the per-stage verdicts.
pub fn verify_projection_equality_staged(
    os: &OrthogonalSet,
    batches: &[usize],
) -> Result<(bool, Vec<bool>), Error> {
    let datum = &os.variety().datum;
    if datum.kind() != GroupKind::GLn {
        return Err(Error::InvalidDatum(
            "staged batch checks apply to GL:n".into(),
        ));
    }
    let total: usize = batches.iter().sum();
    if total != datum.n() || batches.contains(&0) {
        return Err(Error::BatchMismatch {
            expected: datum.n(),
            got: total,
        });
    }
    let mut sizes = batches.to_vec();
    let mut current = os.clone();
    let mut stages = Vec::new();
    let mut remaining: usize = sizes.iter().map(|&k| k - 1).sum();
    for b in 0..sizes.len() {
        while sizes[b] >= 2 {
            let pos: usize = sizes[..b].iter().sum();
            let n = current.variety().datum.n();
            let mut alpha = vec![0i64; n];
            alpha[pos] = 1;
            alpha[pos + 1] = -1;
            let alpha = Character::from_ints(GroupKind::GLn, &alpha);
            let report = phi_cokernel(&current, &alpha)?;
            stages.push(report.coker_dim == 0);
            sizes[b] -= 1;
            remaining -= 1;
            if remaining > 0 {
                current = current.merge_along_simple_root(pos)?;
            }
        }
    }
    Ok((stages.iter().all(|&s| s), stages))
}

/// All ordered batch decompositions of n (compositions).
pub fn batch_compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in batch_compositions(n - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

fn random_sum_zero(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-max..=max)).collect();
        if v.iter().sum::<i64>() == 0 {
            return v;
        }
    }
}

fn random_dominant(variety: &Variety, rng: &mut ChaCha8Rng, max: i64) -> Character {
    let kind = variety.datum.kind();
    let n = variety.datum.n();
    match kind {
        GroupKind::GLn => {
            let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            Character::from_ints(kind, &v)
        }
        GroupKind::SLn => {
            let mut v = random_sum_zero(rng, n, max);
            v.sort_unstable_by(|a, b| b.cmp(a));
            Character::from_ints(kind, &v)
        }
        GroupKind::G2 => {
            let a = rng.gen_range(0..=max);
            let b = rng.gen_range(0..=a);
            Character::from_ints(kind, &[a, b, -a - b])
        }
    }
}

fn constant_set(variety: &Arc<Variety>, rng: &mut ChaCha8Rng) -> OrthogonalSet {
    let n = variety.datum.n();
    let c = match variety.datum.kind() {
        GroupKind::GLn => Character::from_ints(
            GroupKind::GLn,
            &(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>(),
        ),
        kind => Character::from_ints(kind, &random_sum_zero(rng, n, 2)),
    };
    OrthogonalSet::from_chars(variety.clone(), vec![c; variety.fan.cones.len()])
        .expect("constant family is an orthogonal set")
}

/// A seeded random positive orthogonal set with all wall increments at
/// most `bound`. Built as a sum of one or two Weyl-orbit sets of small
/// dominant weights plus an integral translate; sums of positive sets
/// stay positive, and draws whose increments exceed the bound are
/// redrawn. `bound = 0` yields a constant set.
pub fn random_positive_orthogonal_set(
    variety: &Arc<Variety>,
    bound: i64,
    seed: u64,
) -> OrthogonalSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if bound <= 0 {
        return constant_set(variety, &mut rng);
    }
    let max_entry = bound.min(3);
    for _ in 0..64 {
        let k = rng.gen_range(1..=2);
        let mut chars: Vec<Character> =
            vec![Character::zero(variety.datum.kind(), variety.datum.n()); variety.fan.cones.len()];
        for _ in 0..k {
            let mu = random_dominant(variety, &mut rng, max_entry);
            let orbit_set = OrthogonalSet::from_weyl_orbit(variety, &mu)
                .expect("dominant weights are integral");
            for (c, o) in chars.iter_mut().zip(orbit_set.chars()) {
                *c = c.add(o);
            }
        }
        let shift = match variety.datum.kind() {
            GroupKind::GLn => Character::from_ints(
                GroupKind::GLn,
                &(0..variety.datum.n())
                    .map(|_| rng.gen_range(-2..=2))
                    .collect::<Vec<_>>(),
            ),
            kind => Character::from_ints(kind, &random_sum_zero(&mut rng, variety.datum.n(), 2)),
        };
        let chars = chars.into_iter().map(|c| c.add(&shift)).collect();
        let os = OrthogonalSet::from_chars(variety.clone(), chars)
            .expect("orbit sums are integral families");
        let v = os.validate();
        assert!(v.valid && v.positive, "orbit sums validate positive");
        if v.max_increment()
            .is_none_or(|m| m <= Rat::from_integer(bound))
        {
            return os;
        }
    }
    constant_set(variety, &mut rng)
}

/// A seeded random valid (not necessarily positive) orthogonal set,
/// drawn by sampling one integer coefficient per ray; on these
/// unimodular fans any coefficient vector solves to a valid set.
pub fn random_valid_orthogonal_set(variety: &Arc<Variety>, bound: i64, seed: u64) -> OrthogonalSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = bound.max(1);
    let coeffs: Vec<i64> = (0..variety.fan.rays.len())
        .map(|_| rng.gen_range(-range..=range))
        .collect();
    let sum = if variety.datum.kind() == GroupKind::GLn {
        rng.gen_range(-range..=range)
    } else {
        0
    };
    OrthogonalSet::from_ray_coefficients(variety, &coeffs, sum)
        .expect("coefficient count matches the fan")
}

/// The built-in positive set on the G2 fan with characters (1,0,-1) on
/// cones 1-5 and 12 and (0,-1,1) on cones 6-11; the projection along
/// (1,-1,0) misses the origin, so the projection equality fails.
pub fn g2_counterexample_set() -> OrthogonalSet {
    let variety = Arc::new(Variety::new(GroupKind::G2, 3).expect("fixed datum"));
    let a = Character::from_ints(GroupKind::G2, &[1, 0, -1]);
    let b = Character::from_ints(GroupKind::G2, &[0, -1, 1]);
    let chars = (1..=12)
        .map(|i| {
            if (1..=5).contains(&i) || i == 12 {
                a.clone()
            } else {
                b.clone()
            }
        })
        .collect();
    OrthogonalSet::from_chars(variety, chars).expect("literal data")
}

/// The counterexample package: the set, its failing projection report
/// for alpha = (1,-1,0), and the cohomology report with cokernel 1 and
/// the per-eigenweight oracle attached.
pub fn g2_counterexample() -> (OrthogonalSet, ProjectionReport, CohomologyReport) {
    let os = g2_counterexample_set();
    let alpha = Character::from_ints(GroupKind::G2, &[1, -1, 0]);
    let projection =
        verify_projection_equality(&os, &LeviSpec::Root(alpha.clone())).expect("positive set");
    let cohomology = phi_cokernel_with_oracle(&os, &alpha).expect("positive set");
    (os, projection, cohomology)
}

/// The four one-parameter orbit families used to verify the G2 vanishing
/// statement, indexed (a)-(d): orbits of n times a long or short root,
/// paired with a short or long alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G2Family {
    A,
    B,
    C,
    D,
}

impl G2Family {
    pub const ALL: [G2Family; 4] = [G2Family::A, G2Family::B, G2Family::C, G2Family::D];

    pub fn label(&self) -> &'static str {
        match self {
            G2Family::A => "a",
            G2Family::B => "b",
            G2Family::C => "c",
            G2Family::D => "d",
        }
    }
}

/// Build family case `family` at parameter `n >= 1`; returns the orbit
/// set and the root alpha to restrict along.
pub fn g2_family_case(family: G2Family, n: i64) -> Result<(OrthogonalSet, Character), Error> {
    if n < 1 {
        return Err(Error::InvalidDatum("family parameter must be >= 1".into()));
    }
    let variety = Arc::new(Variety::new(GroupKind::G2, 3)?);
    let mu = match family {
        G2Family::A | G2Family::B => Character::from_ints(GroupKind::G2, &[2 * n, -n, -n]),
        G2Family::C | G2Family::D => Character::from_ints(GroupKind::G2, &[n, 0, -n]),
    };
    let alpha = match family {
        G2Family::A | G2Family::C => Character::from_ints(GroupKind::G2, &[1, -1, 0]),
        G2Family::B | G2Family::D => Character::from_ints(GroupKind::G2, &[2, -1, -1]),
    };
    let os = OrthogonalSet::from_weyl_orbit(&variety, &mu)?;
    Ok((os, alpha))
}
