//! Root data for GL(n), SL(n), and G2 in explicit coordinates.
//!
//! Characters are exact rational vectors of length `n`. For SL(n) and G2
//! they live in the sum-zero sublattice of Z^n (n = 3 for G2); for GL(n)
//! the full lattice Z^n is allowed. Cocharacters for SL(n)/G2 live in
//! Z^n modulo Z(1,...,1) and are stored by the canonical representative
//! with last coordinate 0, which keeps the pairing a literal dot product
//! against sum-zero characters. GL(n) coroots are honest Z^n vectors.
//!
//! G2 uses the coordinates with short root (1,-1,0) and long root
//! (2,-1,-1); its Weyl group is generated by the two simple reflections
//! and orbits are computed by closure rather than from a table of twelve
//! matrices.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::linalg::{dot_i64, dot_rat_i64, solve_consistent, Rat};

/// Which group the coordinates belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    GLn,
    SLn,
    G2,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::GLn => write!(f, "GL"),
            GroupKind::SLn => write!(f, "SL"),
            GroupKind::G2 => write!(f, "G2"),
        }
    }
}

/// Parse a datum name as used in CLI flags and JSON files: "GL:4",
/// "SL:3", or "G2".
pub fn parse_datum(s: &str) -> Result<(GroupKind, usize), Error> {
    if s == "G2" {
        return Ok((GroupKind::G2, 3));
    }
    let (kind, n) = match s.split_once(':') {
        Some(("GL", n)) => (GroupKind::GLn, n),
        Some(("SL", n)) => (GroupKind::SLn, n),
        _ => return Err(Error::InvalidDatum(format!("unrecognized datum `{s}`"))),
    };
    let n: usize = n
        .parse()
        .map_err(|_| Error::InvalidDatum(format!("bad rank in datum `{s}`")))?;
    Ok((kind, n))
}

/// Canonical datum name, inverse of [`parse_datum`].
pub fn datum_name(kind: GroupKind, n: usize) -> String {
    match kind {
        GroupKind::GLn => format!("GL:{n}"),
        GroupKind::SLn => format!("SL:{n}"),
        GroupKind::G2 => "G2".to_string(),
    }
}

/// A character: an exact rational vector in the weight coordinates of the
/// datum. Integral characters have integer entries; projections along a
/// root may introduce half-integral entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    kind: GroupKind,
    coords: Vec<Rat>,
}

impl Character {
    pub fn new(kind: GroupKind, coords: Vec<Rat>) -> Self {
        Character { kind, coords }
    }

    pub fn from_ints(kind: GroupKind, coords: &[i64]) -> Self {
        Character {
            kind,
            coords: coords.iter().map(|&c| Rat::from_integer(c)).collect(),
        }
    }

    pub fn zero(kind: GroupKind, n: usize) -> Self {
        Character {
            kind,
            coords: vec![Rat::zero(); n],
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord_sum(&self) -> Rat {
        self.coords.iter().copied().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Integer coordinates, if all entries are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &Character) -> Character {
        debug_assert_eq!(self.kind, other.kind);
        Character {
            kind: self.kind,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Character) -> Character {
        debug_assert_eq!(self.kind, other.kind);
        Character {
            kind: self.kind,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Rat) -> Character {
        Character {
            kind: self.kind,
            coords: self.coords.iter().map(|a| *a * c).collect(),
        }
    }

    pub fn neg(&self) -> Character {
        self.scale(-Rat::from_integer(1))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A cocharacter. `modded` marks vectors taken modulo Z(1,...,1); those
/// are stored by the canonical representative with last coordinate 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocharacter {
    kind: GroupKind,
    modded: bool,
    coords: Vec<i64>,
}

impl Cocharacter {
    /// A cocharacter in the quotient lattice Z^n / Z(1,...,1),
    /// canonicalized so the last coordinate is 0.
    pub fn new_modded(kind: GroupKind, coords: &[i64]) -> Self {
        let last = *coords.last().expect("nonempty coordinates");
        Cocharacter {
            kind,
            modded: true,
            coords: coords.iter().map(|&c| c - last).collect(),
        }
    }

    /// A plain Z^n cocharacter (GL(n) coroots).
    pub fn new_plain(kind: GroupKind, coords: Vec<i64>) -> Self {
        Cocharacter {
            kind,
            modded: false,
            coords,
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_modded(&self) -> bool {
        self.modded
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The canonical pairing between a cocharacter and a character.
///
/// For modded cocharacters the stored canonical representative is used;
/// the value is representative-independent whenever the character has
/// coordinate sum zero, which covers every use the math relies on.
pub fn pairing(v: &Cocharacter, u: &Character) -> Result<Rat, Error> {
    if v.kind != u.kind || v.coords.len() != u.coords.len() {
        return Err(Error::IncompatibleKinds);
    }
    Ok(dot_rat_i64(&u.coords, &v.coords))
}

/// Exact model of the roots, coroots, and Weyl action of one group.
#[derive(Debug, Clone)]
pub struct RootDatum {
    kind: GroupKind,
    n: usize,
    roots: Vec<Character>,
    simple_roots: Vec<Character>,
    coroots: Vec<Cocharacter>, // aligned with `roots`
}

impl RootDatum {
    /// Build the root datum. `n` is the coordinate length for GL(n)/SL(n)
    /// (at least 2) and is ignored for G2, which is fixed in Z^3/Z(1,1,1).
    pub fn new(kind: GroupKind, n: usize) -> Result<Self, Error> {
        match kind {
            GroupKind::GLn | GroupKind::SLn => {
                if n < 2 {
                    return Err(Error::InvalidDatum(format!(
                        "{kind}:{n} needs rank parameter n >= 2"
                    )));
                }
                let mut roots = Vec::new();
                let mut coroots = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i == j {
                            continue;
                        }
                        let mut c = vec![0i64; n];
                        c[i] = 1;
                        c[j] = -1;
                        roots.push(Character::from_ints(kind, &c));
                        coroots.push(match kind {
                            GroupKind::GLn => Cocharacter::new_plain(kind, c.clone()),
                            _ => Cocharacter::new_modded(kind, &c),
                        });
                    }
                }
                let simple_roots = (0..n - 1)
                    .map(|i| {
                        let mut c = vec![0i64; n];
                        c[i] = 1;
                        c[i + 1] = -1;
                        Character::from_ints(kind, &c)
                    })
                    .collect();
                Ok(RootDatum {
                    kind,
                    n,
                    roots,
                    simple_roots,
                    coroots,
                })
            }
            GroupKind::G2 => {
                // Six short roots (the A2 hexagon) and six long ones.
                let short: [[i64; 3]; 3] = [[1, -1, 0], [0, 1, -1], [1, 0, -1]];
                let long: [[i64; 3]; 3] = [[2, -1, -1], [-1, 2, -1], [1, 1, -2]];
                let mut roots = Vec::new();
                let mut coroots = Vec::new();
                for r in short {
                    for sign in [1i64, -1] {
                        let c: Vec<i64> = r.iter().map(|&x| sign * x).collect();
                        // a short coroot is the root itself
                        coroots.push(Cocharacter::new_modded(GroupKind::G2, &c));
                        roots.push(Character::from_ints(GroupKind::G2, &c));
                    }
                }
                for r in long {
                    for sign in [1i64, -1] {
                        let c: Vec<i64> = r.iter().map(|&x| sign * x).collect();
                        // a long coroot is root/3, integral in the quotient lattice
                        let third: Vec<i64> = match r {
                            [2, -1, -1] => vec![1, 0, 0],
                            [-1, 2, -1] => vec![0, 1, 0],
                            [1, 1, -2] => vec![0, 0, -1],
                            _ => unreachable!(),
                        };
                        let cr: Vec<i64> = third.iter().map(|&x| sign * x).collect();
                        coroots.push(Cocharacter::new_modded(GroupKind::G2, &cr));
                        roots.push(Character::from_ints(GroupKind::G2, &c));
                    }
                }
                let simple_roots = vec![
                    Character::from_ints(GroupKind::G2, &[1, -1, 0]),
                    Character::from_ints(GroupKind::G2, &[-1, 2, -1]),
                ];
                Ok(RootDatum {
                    kind: GroupKind::G2,
                    n: 3,
                    roots,
                    simple_roots,
                    coroots,
                })
            }
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Coordinate length of characters (3 for G2).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the ambient real vector space of the Weyl fan.
    pub fn rank(&self) -> usize {
        match self.kind {
            GroupKind::GLn | GroupKind::SLn => self.n - 1,
            GroupKind::G2 => 2,
        }
    }

    pub fn roots(&self) -> &[Character] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[Character] {
        &self.simple_roots
    }

    pub fn is_root(&self, alpha: &Character) -> bool {
        self.roots.iter().any(|r| r == alpha)
    }

    pub fn coroot(&self, alpha: &Character) -> Result<&Cocharacter, Error> {
        self.roots
            .iter()
            .position(|r| r == alpha)
            .map(|i| &self.coroots[i])
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))
    }

    /// The reflection s_alpha(u) = u - <alpha_vee, u> alpha.
    pub fn reflect(&self, alpha: &Character, u: &Character) -> Result<Character, Error> {
        let coroot = self.coroot(alpha)?;
        let c = pairing(coroot, u)?;
        Ok(u.sub(&alpha.scale(c)))
    }

    /// The Weyl orbit of `mu`, as a lexicographically sorted list.
    /// Computed by closing under the simple reflections.
    pub fn weyl_orbit(&self, mu: &Character) -> Result<Vec<Character>, Error> {
        if mu.kind() != self.kind || mu.len() != self.n {
            return Err(Error::IncompatibleKinds);
        }
        let mut seen: BTreeSet<Character> = BTreeSet::new();
        let mut frontier = vec![mu.clone()];
        seen.insert(mu.clone());
        while let Some(u) = frontier.pop() {
            for alpha in &self.simple_roots.clone() {
                let v = self.reflect(alpha, &u)?;
                if seen.insert(v.clone()) {
                    frontier.push(v);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Projection along the root `alpha` onto the coroot hyperplane:
    /// p_alpha(u) = u - (<alpha_vee, u>/2) alpha. Idempotent, and the
    /// image pairs to zero with the coroot.
    pub fn project_along_root(&self, u: &Character, alpha: &Character) -> Result<Character, Error> {
        let coroot = self.coroot(alpha)?;
        let c = pairing(coroot, u)?;
        Ok(u.sub(&alpha.scale(c / Rat::from_integer(2))))
    }

    /// Whether `mu` pairs nonnegatively with every simple coroot.
    pub fn is_dominant(&self, mu: &Character) -> Result<bool, Error> {
        for alpha in &self.simple_roots {
            if pairing(self.coroot(alpha)?, mu)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership of `u` in the root lattice (the Z-span of the simple
    /// roots). For the lattices here this amounts to integrality plus the
    /// right coordinate sum, but the span test keeps it honest.
    pub fn in_root_lattice(&self, u: &Character) -> Result<bool, Error> {
        if u.kind() != self.kind || u.len() != self.n {
            return Err(Error::IncompatibleKinds);
        }
        // columns = simple roots
        let rows = self.n;
        let cols = self.simple_roots.len();
        let mut a = vec![vec![Rat::zero(); cols]; rows];
        for (j, alpha) in self.simple_roots.iter().enumerate() {
            for (i, c) in alpha.coords().iter().enumerate() {
                a[i][j] = *c;
            }
        }
        match solve_consistent(&a, u.coords()) {
            Some(x) => Ok(x.iter().all(|c| c.is_integer())),
            None => Ok(false),
        }
    }

    /// Batch-average a GL(n) character: each batch of consecutive
    /// coordinates is replaced by its arithmetic mean.
    pub fn pr_levi(&self, u: &Character, batches: &[usize]) -> Result<Character, Error> {
        if self.kind != GroupKind::GLn {
            return Err(Error::InvalidDatum(
                "pr_levi with batches is defined for GL:n only".into(),
            ));
        }
        let total: usize = batches.iter().sum();
        if total != self.n || batches.contains(&0) {
            return Err(Error::BatchMismatch {
                expected: self.n,
                got: total,
            });
        }
        let mut out = Vec::with_capacity(self.n);
        let mut pos = 0;
        for &b in batches {
            let sum: Rat = u.coords()[pos..pos + b].iter().copied().sum();
            let mean = sum / Rat::from_integer(b as i64);
            out.extend(std::iter::repeat_n(mean, b));
            pos += b;
        }
        Ok(Character::new(self.kind, out))
    }
}

/// Fast integral pairing against a stored cocharacter representative.
pub(crate) fn pair_ints(v: &Cocharacter, u: &[i64]) -> i64 {
    dot_i64(&v.coords, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chr(kind: GroupKind, c: &[i64]) -> Character {
        Character::from_ints(kind, c)
    }

    #[test]
    fn root_counts() {
        assert_eq!(RootDatum::new(GroupKind::SLn, 3).unwrap().roots().len(), 6);
        assert_eq!(RootDatum::new(GroupKind::GLn, 4).unwrap().roots().len(), 12);
        assert_eq!(RootDatum::new(GroupKind::G2, 3).unwrap().roots().len(), 12);
    }

    #[test]
    fn g2_contains_the_two_named_roots() {
        let d = RootDatum::new(GroupKind::G2, 3).unwrap();
        assert!(d.is_root(&chr(GroupKind::G2, &[1, -1, 0])));
        assert!(d.is_root(&chr(GroupKind::G2, &[2, -1, -1])));
    }

    #[test]
    fn invalid_construction() {
        assert!(RootDatum::new(GroupKind::GLn, 1).is_err());
        assert!(RootDatum::new(GroupKind::SLn, 0).is_err());
    }

    #[test]
    fn coroot_normalization() {
        for (kind, n) in [(GroupKind::GLn, 4), (GroupKind::SLn, 3), (GroupKind::G2, 3)] {
            let d = RootDatum::new(kind, n).unwrap();
            for alpha in d.roots() {
                let v = d.coroot(alpha).unwrap();
                assert_eq!(pairing(v, alpha).unwrap(), Rat::from_integer(2));
            }
        }
    }

    #[test]
    fn pairing_example_sl3() {
        let d = RootDatum::new(GroupKind::SLn, 3).unwrap();
        let l1 = Cocharacter::new_modded(GroupKind::SLn, &[1, 0, 0]);
        let alpha = chr(GroupKind::SLn, &[1, -1, 0]);
        assert_eq!(pairing(&l1, &alpha).unwrap(), Rat::from_integer(1));
        drop(d);
    }

    #[test]
    fn g2_long_coroot_pairs_to_first_coordinate() {
        // <alpha_vee, (a,b,-a-b)> = a for alpha = (2,-1,-1)
        let d = RootDatum::new(GroupKind::G2, 3).unwrap();
        let alpha = chr(GroupKind::G2, &[2, -1, -1]);
        let coroot = d.coroot(&alpha).unwrap();
        for (a, b) in [(3i64, -1i64), (0, 2), (-2, 5)] {
            let u = chr(GroupKind::G2, &[a, b, -a - b]);
            assert_eq!(pairing(coroot, &u).unwrap(), Rat::from_integer(a));
            let p = d.project_along_root(&u, &alpha).unwrap();
            let half = Rat::new(a, 2);
            assert_eq!(
                p.coords(),
                &[
                    Rat::zero(),
                    half + Rat::from_integer(b),
                    -half - Rat::from_integer(b)
                ]
            );
        }
    }

    #[test]
    fn projection_averages_adjacent_coordinates() {
        let d = RootDatum::new(GroupKind::GLn, 4).unwrap();
        let alpha = chr(GroupKind::GLn, &[1, -1, 0, 0]);
        let u = chr(GroupKind::GLn, &[3, 1, 0, 2]);
        let p = d.project_along_root(&u, &alpha).unwrap();
        assert_eq!(p, chr(GroupKind::GLn, &[2, 2, 0, 2]));
        // fixed points of the projection
        let fixed = chr(GroupKind::GLn, &[1, 1, 5, -2]);
        assert_eq!(d.project_along_root(&fixed, &alpha).unwrap(), fixed);
    }

    #[test]
    fn projection_rejects_non_roots() {
        let d = RootDatum::new(GroupKind::SLn, 3).unwrap();
        let not_root = chr(GroupKind::SLn, &[2, -2, 0]);
        assert!(d
            .project_along_root(&chr(GroupKind::SLn, &[1, 0, -1]), &not_root)
            .is_err());
    }

    #[test]
    fn orbit_sizes() {
        let gl3 = RootDatum::new(GroupKind::GLn, 3).unwrap();
        assert_eq!(
            gl3.weyl_orbit(&chr(GroupKind::GLn, &[2, 1, 0]))
                .unwrap()
                .len(),
            6
        );
        let sl3 = RootDatum::new(GroupKind::SLn, 3).unwrap();
        assert_eq!(
            sl3.weyl_orbit(&chr(GroupKind::SLn, &[1, 0, -1]))
                .unwrap()
                .len(),
            6
        );
        let g2 = RootDatum::new(GroupKind::G2, 3).unwrap();
        assert_eq!(
            g2.weyl_orbit(&chr(GroupKind::G2, &[1, 0, -1]))
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn g2_orbit_matches_hand_closure() {
        // closure of (1,0,-1) under coordinate swap and u -> u - b(-1,2,-1)
        let g2 = RootDatum::new(GroupKind::G2, 3).unwrap();
        let orbit = g2.weyl_orbit(&chr(GroupKind::G2, &[1, 0, -1])).unwrap();
        let expect: BTreeSet<Character> = [
            [1, 0, -1],
            [0, 1, -1],
            [1, -1, 0],
            [-1, 1, 0],
            [0, -1, 1],
            [-1, 0, 1],
        ]
        .iter()
        .map(|c| chr(GroupKind::G2, c))
        .collect();
        assert_eq!(orbit.into_iter().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn pr_levi_examples() {
        let d = RootDatum::new(GroupKind::GLn, 4).unwrap();
        let u = chr(GroupKind::GLn, &[3, 1, 0, 2]);
        assert_eq!(
            d.pr_levi(&u, &[2, 2]).unwrap(),
            chr(GroupKind::GLn, &[2, 2, 1, 1])
        );
        assert_eq!(d.pr_levi(&u, &[1, 1, 1, 1]).unwrap(), u);
        let v = chr(GroupKind::GLn, &[3, 0, 0, 2]);
        assert_eq!(
            d.pr_levi(&v, &[3, 1]).unwrap(),
            chr(GroupKind::GLn, &[1, 1, 1, 2])
        );
        assert!(d.pr_levi(&u, &[2, 1]).is_err());
    }

    #[test]
    fn root_lattice_membership() {
        let g2 = RootDatum::new(GroupKind::G2, 3).unwrap();
        assert!(g2
            .in_root_lattice(&chr(GroupKind::G2, &[1, 0, -1]))
            .unwrap());
        let gl3 = RootDatum::new(GroupKind::GLn, 3).unwrap();
        assert!(gl3
            .in_root_lattice(&chr(GroupKind::GLn, &[1, -1, 0]))
            .unwrap());
        assert!(!gl3
            .in_root_lattice(&chr(GroupKind::GLn, &[1, 0, 0]))
            .unwrap());
    }

    #[test]
    fn datum_names_round_trip() {
        for s in ["GL:4", "SL:3", "G2"] {
            let (kind, n) = parse_datum(s).unwrap();
            assert_eq!(datum_name(kind, n), s);
        }
        assert!(parse_datum("SO:5").is_err());
        assert!(parse_datum("GL:x").is_err());
    }
}
