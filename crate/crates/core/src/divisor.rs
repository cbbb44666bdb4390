//! Orthogonal sets as torus-equivariant divisors.
//!
//! An orthogonal set assigns one integral character u(sigma) to each
//! maximal cone so that adjacent cones differ by an integer multiple of
//! the wall root: u(sigma) - u(sigma') = m * alpha with alpha positive on
//! sigma. The set is *positive* when every m >= 0 and *strictly positive*
//! when it is positive with pairwise distinct characters. The associated
//! support function psi_D(v) = <u(sigma), v> on each cone is convex
//! exactly when the divisor is generated by its sections, and the
//! convexity test here is the finite ray criterion: every character must
//! stay below psi at every fan ray.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::fan::{divisor_subfan, parallel_ratio, Fan, Variety};
use crate::linalg::{dot_rat_i64, Rat};
use crate::root_system::{pair_ints, Character, GroupKind};

/// One character per maximal cone of the Weyl fan.
#[derive(Debug, Clone)]
pub struct OrthogonalSet {
    variety: Arc<Variety>,
    chars: Vec<Character>,
}

/// Outcome of the wall-condition check.
#[derive(Debug, Clone)]
pub struct Validation {
    pub valid: bool,
    pub positive: bool,
    pub strictly_positive: bool,
    /// Wall multiples (cone, neighbor, m) for each undirected wall.
    pub increments: Vec<(usize, usize, Rat)>,
    /// Walls where the condition fails, as displayable cone-id pairs.
    pub violations: Vec<(String, String, String)>,
}

impl Validation {
    pub fn require_valid(&self) -> Result<(), Error> {
        match self.violations.first() {
            None => Ok(()),
            Some((a, b, reason)) => Err(Error::InvalidOrthogonalSet {
                cone_a: a.clone(),
                cone_b: b.clone(),
                reason: reason.clone(),
            }),
        }
    }

    pub fn max_increment(&self) -> Option<Rat> {
        self.increments.iter().map(|(_, _, m)| *m).max()
    }
}

/// `delta = t * dir` for some rational t (any sign)? Returns t.
fn proportional_factor(delta: &Character, dir: &Character) -> Option<Rat> {
    if delta.is_zero() {
        return Some(Rat::zero());
    }
    if let Some(t) = parallel_ratio(delta, dir) {
        return Some(t);
    }
    parallel_ratio(&delta.neg(), dir).map(|t| -t)
}

/// Wall-condition check shared by full fans and sub-fans.
pub(crate) fn validate_chars(fan: &Fan, chars: &[Character]) -> Validation {
    let mut increments = Vec::new();
    let mut violations = Vec::new();
    for (a, walls) in fan.adjacency.iter().enumerate() {
        for w in walls {
            if w.other < a {
                continue; // each undirected wall once
            }
            let delta = chars[a].sub(&chars[w.other]);
            match proportional_factor(&delta, &w.direction) {
                Some(m) if m.is_integer() => increments.push((a, w.other, m)),
                Some(m) => violations.push((
                    fan.cones[a].id.to_string(),
                    fan.cones[w.other].id.to_string(),
                    format!("difference is {m} times the wall direction, not an integer multiple"),
                )),
                None => violations.push((
                    fan.cones[a].id.to_string(),
                    fan.cones[w.other].id.to_string(),
                    "difference is not parallel to the wall direction".to_string(),
                )),
            }
        }
    }
    let valid = violations.is_empty();
    let positive = valid && increments.iter().all(|(_, _, m)| !m.is_negative());
    let mut distinct = true;
    'outer: for i in 0..chars.len() {
        for j in i + 1..chars.len() {
            if chars[i] == chars[j] {
                distinct = false;
                break 'outer;
            }
        }
    }
    Validation {
        valid,
        positive,
        strictly_positive: positive && distinct,
        increments,
        violations,
    }
}

impl OrthogonalSet {
    /// Wrap explicit per-cone characters. Characters must be integral;
    /// run [`validate`](Self::validate) to check the wall condition.
    pub fn from_chars(variety: Arc<Variety>, chars: Vec<Character>) -> Result<Self, Error> {
        if chars.len() != variety.fan.cones.len() {
            return Err(Error::InvalidDatum(format!(
                "expected one character per maximal cone ({}), got {}",
                variety.fan.cones.len(),
                chars.len()
            )));
        }
        for c in &chars {
            if c.kind() != variety.datum.kind() || c.len() != variety.datum.n() {
                return Err(Error::IncompatibleKinds);
            }
            if !c.is_integral() {
                return Err(Error::NonIntegralCharacter(c.to_string()));
            }
        }
        Ok(OrthogonalSet { variety, chars })
    }

    /// The positive orthogonal set of a Weyl orbit: each cone receives
    /// the unique orbit element dominant for its chamber, found as the
    /// maximizer over the orbit at an interior point of the cone.
    pub fn from_weyl_orbit(variety: &Arc<Variety>, mu: &Character) -> Result<Self, Error> {
        if !mu.is_integral() {
            return Err(Error::NonIntegralCharacter(mu.to_string()));
        }
        let orbit = variety.datum.weyl_orbit(mu)?;
        let n = variety.datum.n();
        let mut chars = Vec::with_capacity(variety.fan.cones.len());
        for cone in &variety.fan.cones {
            let mut interior = vec![0i64; n];
            for &r in &cone.rays {
                for (i, &c) in variety.fan.rays[r].coords().iter().enumerate() {
                    interior[i] += c;
                }
            }
            let values: Vec<Rat> = orbit
                .iter()
                .map(|u| dot_rat_i64(u.coords(), &interior))
                .collect();
            let max = *values.iter().max().expect("orbit is nonempty");
            let argmax: Vec<&Character> = orbit
                .iter()
                .zip(&values)
                .filter(|(_, v)| **v == max)
                .map(|(u, _)| u)
                .collect();
            // an interior point of a chamber has a unique maximizer
            // among the orbit vertices
            assert_eq!(
                argmax.len(),
                1,
                "ambiguous dominant orbit element for cone {}",
                cone.id
            );
            chars.push(argmax[0].clone());
        }
        Ok(OrthogonalSet {
            variety: variety.clone(),
            chars,
        })
    }

    pub fn variety(&self) -> &Arc<Variety> {
        &self.variety
    }

    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    pub fn char_for(&self, cone: usize) -> &Character {
        &self.chars[cone]
    }

    /// Common coordinate sum of the characters (0 for SL(n)/G2).
    pub fn common_sum(&self) -> i64 {
        let s = self.chars[0].coord_sum();
        debug_assert!(s.is_integer());
        s.to_integer()
    }

    pub fn validate(&self) -> Validation {
        validate_chars(&self.variety.fan, &self.chars)
    }

    /// Evaluate the support function psi_D at `v` (coordinates of length
    /// n, read modulo (1,...,1)). Well-defined on cone overlaps for valid
    /// sets; for GL(n) the value depends on the chosen representative of
    /// `v` while all membership tests reduce to representative-free
    /// differences.
    pub fn evaluate_psi(&self, v: &[Rat]) -> Rat {
        assert_eq!(v.len(), self.variety.datum.n(), "coordinate length mismatch");
        let cone = self.variety.fan.locate_cone(v);
        self.chars[cone]
            .coords()
            .iter()
            .zip(v)
            .fold(Rat::zero(), |acc, (a, b)| acc + *a * *b)
    }

    /// Ray coefficients a_rho = <u(sigma), v_rho> for any cone containing
    /// rho; cone-independent on valid sets.
    pub fn ray_coefficients(&self) -> Vec<i64> {
        let fan = &self.variety.fan;
        let mut coeffs = vec![0i64; fan.rays.len()];
        let mut seen = vec![false; fan.rays.len()];
        for (ci, cone) in fan.cones.iter().enumerate() {
            let u = self.chars[ci].to_ints().expect("integral characters");
            for &r in &cone.rays {
                let val = pair_ints(&fan.rays[r], &u);
                if seen[r] {
                    debug_assert_eq!(coeffs[r], val, "ray coefficient differs across cones");
                } else {
                    coeffs[r] = val;
                    seen[r] = true;
                }
            }
        }
        debug_assert!(seen.iter().all(|&s| s));
        coeffs
    }

    /// Rebuild the orthogonal set with the given ray coefficients and
    /// common coordinate sum (`sum` must be 0 for SL(n)/G2). On these
    /// unimodular fans every integer coefficient vector solves to an
    /// integral character family satisfying the wall condition, so this
    /// is total.
    pub fn from_ray_coefficients(
        variety: &Arc<Variety>,
        coeffs: &[i64],
        sum: i64,
    ) -> Result<Self, Error> {
        let fan = &variety.fan;
        if coeffs.len() != fan.rays.len() {
            return Err(Error::InvalidDatum(format!(
                "expected {} ray coefficients, got {}",
                fan.rays.len(),
                coeffs.len()
            )));
        }
        if variety.datum.kind() != GroupKind::GLn && sum != 0 {
            return Err(Error::InvalidDatum(
                "sum-zero lattices require sum = 0".into(),
            ));
        }
        let n = variety.datum.n();
        let mut chars = Vec::with_capacity(fan.cones.len());
        for cone in &fan.cones {
            // rows: <u, v_rho> = a_rho over the cone's rays, plus the sum row
            let mut a = Vec::with_capacity(n);
            let mut b = Vec::with_capacity(n);
            for &r in &cone.rays {
                a.push(
                    fan.rays[r]
                        .coords()
                        .iter()
                        .map(|&c| Rat::from_integer(c))
                        .collect::<Vec<_>>(),
                );
                b.push(Rat::from_integer(coeffs[r]));
            }
            a.push(vec![Rat::from_integer(1); n]);
            b.push(Rat::from_integer(sum));
            let u = crate::linalg::solve_square(&a, &b)
                .expect("unimodular maximal cone gives an invertible system");
            let ch = Character::new(variety.datum.kind(), u);
            debug_assert!(ch.is_integral(), "unimodular solve must be integral");
            chars.push(ch);
        }
        Ok(OrthogonalSet {
            variety: variety.clone(),
            chars,
        })
    }

    /// The finite ray criterion for convexity of psi_D: every character
    /// must satisfy <u(sigma), v_rho> <= psi(v_rho) at every fan ray.
    /// Equivalent to positivity for valid sets on Weyl fans.
    pub fn is_convex(&self) -> bool {
        let fan = &self.variety.fan;
        let coeffs = self.ray_coefficients();
        for u in &self.chars {
            let ints = u.to_ints().expect("integral characters");
            for (r, ray) in fan.rays.iter().enumerate() {
                if pair_ints(ray, &ints) > coeffs[r] {
                    return false;
                }
            }
        }
        true
    }

    /// The orthogonal set of D - D_alpha: subtract alpha from u(sigma)
    /// on the cones where alpha >= 0 and keep it where alpha <= 0. The
    /// sign is decided on ray generators; on a Weyl fan no maximal cone
    /// sees both signs.
    pub fn subtract_d_alpha(&self, alpha: &Character) -> Result<Self, Error> {
        if !self.variety.datum.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        let fan = &self.variety.fan;
        let a_ints = alpha.to_ints().expect("roots are integral");
        let mut chars = Vec::with_capacity(self.chars.len());
        for (ci, cone) in fan.cones.iter().enumerate() {
            let signs: Vec<i64> = cone
                .rays
                .iter()
                .map(|&r| pair_ints(&fan.rays[r], &a_ints))
                .collect();
            let pos = signs.iter().any(|&s| s > 0);
            let neg = signs.iter().any(|&s| s < 0);
            assert!(!(pos && neg), "root changes sign inside a maximal cone");
            assert!(pos || neg, "root vanishes on a maximal cone");
            if pos {
                chars.push(self.chars[ci].sub(alpha));
            } else {
                chars.push(self.chars[ci].clone());
            }
        }
        Ok(OrthogonalSet {
            variety: self.variety.clone(),
            chars,
        })
    }

    /// Inverse of [`Self::subtract_d_alpha`]: add the D_alpha set back.
    pub fn add_d_alpha(&self, alpha: &Character) -> Result<Self, Error> {
        let minus = self.subtract_d_alpha(&alpha.clone())?;
        // adding is subtracting with flipped contribution
        let chars = self
            .chars
            .iter()
            .zip(&minus.chars)
            .map(|(orig, sub)| orig.add(&orig.sub(sub)))
            .collect();
        Ok(OrthogonalSet {
            variety: self.variety.clone(),
            chars,
        })
    }

    /// Translate every character by -u.
    pub fn shift(&self, u: &Character) -> Result<Self, Error> {
        if !u.is_integral() {
            return Err(Error::NonIntegralCharacter(u.to_string()));
        }
        if u.kind() != self.variety.datum.kind() || u.len() != self.variety.datum.n() {
            return Err(Error::IncompatibleKinds);
        }
        Ok(OrthogonalSet {
            variety: self.variety.clone(),
            chars: self.chars.iter().map(|c| c.sub(u)).collect(),
        })
    }

    /// Restrict to the divisor over [beta = 0]: the sub-fan inherits the
    /// common projected value p_beta(u(sigma)) from either cone across
    /// each wall.
    pub fn restrict_to_divisor(&self, beta: &Character) -> Result<RestrictedSet, Error> {
        let subfan = divisor_subfan(&self.variety.datum, &self.variety.fan, beta)?;
        let fan = &self.variety.fan;
        // match sub-fan rays back to parent ray indices
        let parent_ray: HashMap<Vec<i64>, usize> = fan
            .rays
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords().to_vec(), i))
            .collect();
        let mut chars = Vec::with_capacity(subfan.cones.len());
        for cone in &subfan.cones {
            let rays: Vec<usize> = cone
                .rays
                .iter()
                .map(|&r| parent_ray[subfan.rays[r].coords()])
                .collect();
            let host = (0..fan.cones.len())
                .find(|&c| rays.iter().all(|r| fan.cones[c].rays.contains(r)))
                .expect("sub-fan cone is a face of some maximal cone");
            let projected = self
                .variety
                .datum
                .project_along_root(&self.chars[host], beta)?;
            #[cfg(debug_assertions)]
            {
                for c in 0..fan.cones.len() {
                    if rays.iter().all(|r| fan.cones[c].rays.contains(r)) {
                        let other = self
                            .variety
                            .datum
                            .project_along_root(&self.chars[c], beta)
                            .unwrap();
                        debug_assert_eq!(other, projected, "projected value differs across hosts");
                    }
                }
            }
            chars.push(projected);
        }
        Ok(RestrictedSet {
            parent: self.variety.clone(),
            alpha: beta.clone(),
            subfan,
            chars,
        })
    }

    /// Project along the simple root e_pos - e_{pos+1} (0-based `pos`)
    /// and merge the two averaged coordinates into one, identifying the
    /// divisor with the Weyl fan one rank down. GL(n)/SL(n) only.
    pub fn merge_along_simple_root(&self, pos: usize) -> Result<Self, Error> {
        let kind = self.variety.datum.kind();
        let n = self.variety.datum.n();
        if kind == GroupKind::G2 {
            return Err(Error::InvalidDatum(
                "coordinate merging applies to GL:n and SL:n".into(),
            ));
        }
        if pos + 1 >= n || n < 3 {
            return Err(Error::InvalidDatum(format!(
                "cannot merge coordinates {} and {} of {} coordinates",
                pos + 1,
                pos + 2,
                n
            )));
        }
        let mut alpha = vec![0i64; n];
        alpha[pos] = 1;
        alpha[pos + 1] = -1;
        let alpha = Character::from_ints(kind, &alpha);
        let small = Arc::new(Variety::new(kind, n - 1)?);

        let mut chars = Vec::with_capacity(small.fan.cones.len());
        for cone in &small.fan.cones {
            let crate::fan::ConeId::Ordering(prefix) = &cone.id else {
                unreachable!("type A cones are indexed by orderings")
            };
            // recover the full small ordering, then lift: the merged
            // symbol pos+1 expands to the adjacent pair (pos+1, pos+2)
            let mut ordering: Vec<u8> = prefix.clone();
            let missing = (1..=(n - 1) as u8).find(|s| !ordering.contains(s)).unwrap();
            ordering.push(missing);
            let p = (pos + 1) as u8;
            let mut lifted: Vec<u8> = Vec::with_capacity(n);
            for &s in &ordering {
                if s < p {
                    lifted.push(s);
                } else if s == p {
                    lifted.push(p);
                    lifted.push(p + 1);
                } else {
                    lifted.push(s + 1);
                }
            }
            let host_id = crate::fan::ConeId::Ordering(lifted[..n - 1].to_vec());
            let host = self
                .variety
                .fan
                .cone_index(&host_id)
                .expect("lifted ordering names a maximal cone");
            let projected = self
                .variety
                .datum
                .project_along_root(&self.chars[host], &alpha)?;
            let mut merged = Vec::with_capacity(n - 1);
            for (i, c) in projected.coords().iter().enumerate() {
                if i == pos {
                    merged.push(*c + projected.coords()[pos + 1]);
                } else if i != pos + 1 {
                    merged.push(*c);
                }
            }
            let ch = Character::new(kind, merged);
            debug_assert!(ch.is_integral());
            chars.push(ch);
        }
        OrthogonalSet::from_chars(small, chars)
    }
}

/// An orthogonal set on the sub-fan of a root hyperplane; characters may
/// be half-integral in the averaged coordinates.
#[derive(Debug, Clone)]
pub struct RestrictedSet {
    /// The ambient variety the restriction came from.
    pub parent: Arc<Variety>,
    /// The root whose hyperplane carries the sub-fan.
    pub alpha: Character,
    pub subfan: Fan,
    pub chars: Vec<Character>,
}

impl RestrictedSet {
    pub fn validate(&self) -> Validation {
        validate_chars(&self.subfan, &self.chars)
    }
}
