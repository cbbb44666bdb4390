//! Weyl fans and their root-hyperplane sub-fans.
//!
//! For GL(n) and SL(n) the fan lives in Z^n/Z(1,...,1): rays are the
//! partial sums L_{i_1} + ... + L_{i_k} and maximal cones are indexed by
//! orderings (i_1,...,i_{n-1}) of distinct elements of {1..n}. The G2 fan
//! is the twelve-cone fan over the rays v_1=(1,0,0), v_2=(1,0,-1),
//! v_3=(0,0,-1), v_4=(0,1,-1), v_5=(0,1,0), v_6=(-1,1,0), v_{i+6}=-v_i,
//! hardcoded in these coordinates so orientation never drifts.
//!
//! Cones are stored by their primitive ray generators only; membership is
//! decided by solving the square ray system exactly (every cone here is
//! simplicial and unimodular). Adjacency is shared-ray counting.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::linalg::{solve_square, Rat};
use crate::root_system::{pair_ints, pairing, Character, Cocharacter, GroupKind, RootDatum};

/// Stable identifier of a maximal cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConeId {
    /// GL/SL chamber: the ordering (i_1,...,i_{n-1}), 1-based.
    Ordering(Vec<u8>),
    /// G2 chamber index, 1 through 12.
    Cyclic(u8),
    /// Cone of a root-hyperplane sub-fan (index within that sub-fan).
    Sub(usize),
}

impl fmt::Display for ConeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeId::Ordering(w) => {
                for (i, x) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            ConeId::Cyclic(i) => write!(f, "{i}"),
            ConeId::Sub(i) => write!(f, "s{i}"),
        }
    }
}

/// A maximal cone, stored by indices into the fan's ray table.
#[derive(Debug, Clone)]
pub struct Cone {
    pub id: ConeId,
    pub rays: Vec<usize>,
}

/// One side of a wall between two maximal cones.
#[derive(Debug, Clone)]
pub struct WallCrossing {
    /// Index of the neighboring maximal cone.
    pub other: usize,
    /// Ray indices shared by the two cones (the wall facet).
    pub shared: Vec<usize>,
    /// Wall-crossing direction in character space: vanishes on the shared
    /// facet and is positive on the owning cone. For a full Weyl fan this
    /// is a root; for a sub-fan it is the minimal projected root.
    pub direction: Character,
    /// Coroot of the wall root (full Weyl fans only).
    pub coroot: Option<Cocharacter>,
}

/// A complete simplicial fan: deduplicated primitive rays, maximal cones,
/// and the wall-crossing data of each adjacent pair.
#[derive(Debug, Clone)]
pub struct Fan {
    /// Dimension of the ambient real vector space.
    pub rank: usize,
    pub rays: Vec<Cocharacter>,
    pub cones: Vec<Cone>,
    /// `adjacency[c]` lists every wall of cone `c`.
    pub adjacency: Vec<Vec<WallCrossing>>,
}

impl Fan {
    pub fn cone_index(&self, id: &ConeId) -> Option<usize> {
        self.cones.iter().position(|c| &c.id == id)
    }

    /// The maximal cones incident to a ray.
    pub fn star(&self, ray: usize) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&c| self.cones[c].rays.contains(&ray))
            .collect()
    }

    /// Any maximal cone containing `v` (a coordinate vector of length n,
    /// read modulo (1,...,1)). Completeness guarantees a hit.
    pub fn locate_cone(&self, v: &[Rat]) -> usize {
        let n = v.len();
        assert_eq!(
            n,
            self.rays[0].coords().len(),
            "coordinate length does not match the fan"
        );
        assert_eq!(n, self.rank + 1, "full Weyl fans live in rank+1 coordinates");
        for (ci, cone) in self.cones.iter().enumerate() {
            debug_assert_eq!(cone.rays.len(), self.rank);
            // columns: the cone's rays, then (1,...,1) to absorb the quotient
            let mut a = vec![vec![Rat::zero(); self.rank + 1]; n];
            for (j, &r) in cone.rays.iter().enumerate() {
                for (i, &c) in self.rays[r].coords().iter().enumerate() {
                    a[i][j] = Rat::from_integer(c);
                }
            }
            for row in a.iter_mut() {
                row[self.rank] = Rat::from_integer(1);
            }
            if let Some(t) = solve_square(&a, v) {
                if t[..self.rank].iter().all(|c| !c.is_negative()) {
                    return ci;
                }
            }
        }
        unreachable!("complete fan: every vector lies in some maximal cone")
    }

    /// The walls of a maximal cone.
    pub fn adjacent_cones(&self, cone: usize) -> &[WallCrossing] {
        &self.adjacency[cone]
    }
}

fn permutations(n: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut items: Vec<u8> = (1..=n).collect();
    fn heap(k: usize, items: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(items.len(), &mut items, &mut out);
    out.sort();
    out
}

/// Build the Weyl fan of the datum.
pub fn build_weyl_fan(datum: &RootDatum) -> Fan {
    match datum.kind() {
        GroupKind::GLn | GroupKind::SLn => build_type_a_fan(datum),
        GroupKind::G2 => build_g2_fan(datum),
    }
}

fn build_type_a_fan(datum: &RootDatum) -> Fan {
    let n = datum.n();
    let rank = n - 1;
    let mut rays: Vec<Cocharacter> = Vec::new();
    let mut ray_index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut cones = Vec::new();

    for w in permutations(n as u8) {
        let mut partial = vec![0i64; n];
        let mut cone_rays = Vec::with_capacity(rank);
        for &i in w.iter().take(rank) {
            partial[(i - 1) as usize] = 1;
            let ray = Cocharacter::new_modded(datum.kind(), &partial);
            let idx = *ray_index.entry(ray.coords().to_vec()).or_insert_with(|| {
                rays.push(ray.clone());
                rays.len() - 1
            });
            cone_rays.push(idx);
        }
        cones.push(Cone {
            id: ConeId::Ordering(w[..rank].to_vec()),
            rays: cone_rays,
        });
    }

    let adjacency = wall_data(datum, rank, &rays, &cones);
    Fan {
        rank,
        rays,
        cones,
        adjacency,
    }
}

fn build_g2_fan(datum: &RootDatum) -> Fan {
    let half: [[i64; 3]; 6] = [
        [1, 0, 0],
        [1, 0, -1],
        [0, 0, -1],
        [0, 1, -1],
        [0, 1, 0],
        [-1, 1, 0],
    ];
    let mut rays = Vec::with_capacity(12);
    for v in half {
        rays.push(Cocharacter::new_modded(GroupKind::G2, &v));
    }
    for v in half {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        rays.push(Cocharacter::new_modded(GroupKind::G2, &neg));
    }
    let cones: Vec<Cone> = (0..12)
        .map(|i| Cone {
            id: ConeId::Cyclic((i + 1) as u8),
            rays: vec![i, (i + 1) % 12],
        })
        .collect();
    let adjacency = wall_data(datum, 2, &rays, &cones);
    Fan {
        rank: 2,
        rays,
        cones,
        adjacency,
    }
}

/// Adjacency by shared-ray counting, plus the wall root of each facet:
/// the unique root (up to sign) vanishing on the shared rays, oriented
/// positive on the owning cone.
fn wall_data(
    datum: &RootDatum,
    rank: usize,
    rays: &[Cocharacter],
    cones: &[Cone],
) -> Vec<Vec<WallCrossing>> {
    let mut adjacency: Vec<Vec<WallCrossing>> = vec![Vec::new(); cones.len()];
    for a in 0..cones.len() {
        for b in 0..cones.len() {
            if a == b {
                continue;
            }
            let shared: Vec<usize> = cones[a]
                .rays
                .iter()
                .copied()
                .filter(|r| cones[b].rays.contains(r))
                .collect();
            if shared.len() != rank - 1 {
                continue;
            }
            let root = wall_root(datum, rays, &cones[a], &shared)
                .expect("Weyl fan: every wall lies on exactly one root hyperplane");
            let coroot = datum.coroot(&root).expect("wall roots are roots").clone();
            adjacency[a].push(WallCrossing {
                other: b,
                shared,
                direction: root,
                coroot: Some(coroot),
            });
        }
    }
    adjacency
}

fn wall_root(
    datum: &RootDatum,
    rays: &[Cocharacter],
    cone: &Cone,
    shared: &[usize],
) -> Option<Character> {
    let mut found = None;
    for root in datum.roots() {
        let ints = root.to_ints().expect("roots are integral");
        if shared.iter().any(|&r| pair_ints(&rays[r], &ints) != 0) {
            continue;
        }
        let signs: Vec<i64> = cone
            .rays
            .iter()
            .map(|&r| pair_ints(&rays[r], &ints))
            .collect();
        if signs.iter().any(|&s| s > 0) && signs.iter().all(|&s| s >= 0) {
            match &found {
                None => found = Some(root.clone()),
                // proportional duplicates cannot occur in a reduced system
                Some(prev) if prev != root => return None,
                _ => {}
            }
        }
    }
    found
}

/// The sub-fan of cones lying in the root hyperplane [alpha = 0]: its
/// maximal cones are the wall facets of the Weyl fan on that hyperplane,
/// and it is complete within the hyperplane.
pub fn divisor_subfan(datum: &RootDatum, fan: &Fan, alpha: &Character) -> Result<Fan, Error> {
    if !datum.is_root(alpha) {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    if fan.rank < 2 {
        // a rank-1 fan degenerates: the hyperplane is the origin
        return Err(Error::InvalidDatum(
            "root-hyperplane sub-fans need ambient rank >= 2".into(),
        ));
    }
    let alpha_ints = alpha.to_ints().expect("roots are integral");
    let sub_rank = fan.rank - 1;

    // rays of the sub-fan: parent rays pairing to zero with alpha
    let mut ray_map: HashMap<usize, usize> = HashMap::new();
    let mut rays = Vec::new();
    for (i, r) in fan.rays.iter().enumerate() {
        if pair_ints(r, &alpha_ints) == 0 {
            ray_map.insert(i, rays.len());
            rays.push(r.clone());
        }
    }

    // maximal sub-fan cones: facets of parent cones with all rays on the
    // hyperplane, deduplicated (each wall is seen from both sides)
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut cones = Vec::new();
    for cone in &fan.cones {
        let on_wall: Vec<usize> = cone
            .rays
            .iter()
            .copied()
            .filter(|&r| ray_map.contains_key(&r))
            .collect();
        if on_wall.len() != sub_rank {
            continue;
        }
        let mut key: Vec<usize> = on_wall.iter().map(|r| ray_map[r]).collect();
        key.sort_unstable();
        if !seen.contains_key(&key) {
            seen.insert(key.clone(), cones.len());
            cones.push(Cone {
                id: ConeId::Sub(cones.len()),
                rays: key,
            });
        }
    }

    let adjacency = subfan_wall_data(datum, alpha, sub_rank, &rays, &cones);
    Ok(Fan {
        rank: sub_rank,
        rays,
        cones,
        adjacency,
    })
}

/// Wall data of a sub-fan. The crossing direction between two adjacent
/// sub-fan cones is the minimal projected root p_alpha(gamma) vanishing
/// on their shared face and positive on the owning cone; every other
/// candidate is a positive rational multiple of it.
fn subfan_wall_data(
    datum: &RootDatum,
    alpha: &Character,
    sub_rank: usize,
    rays: &[Cocharacter],
    cones: &[Cone],
) -> Vec<Vec<WallCrossing>> {
    let mut adjacency: Vec<Vec<WallCrossing>> = vec![Vec::new(); cones.len()];
    for a in 0..cones.len() {
        for b in 0..cones.len() {
            if a == b {
                continue;
            }
            let shared: Vec<usize> = cones[a]
                .rays
                .iter()
                .copied()
                .filter(|r| cones[b].rays.contains(r))
                .collect();
            if shared.len() + 1 != sub_rank.max(1) {
                continue;
            }
            let direction = minimal_projected_direction(datum, alpha, rays, &cones[a], &shared)
                .expect("sub-fan wall has a projected root direction");
            adjacency[a].push(WallCrossing {
                other: b,
                shared,
                direction,
                coroot: None,
            });
        }
    }
    adjacency
}

fn minimal_projected_direction(
    datum: &RootDatum,
    alpha: &Character,
    rays: &[Cocharacter],
    cone: &Cone,
    shared: &[usize],
) -> Option<Character> {
    let mut best: Option<Character> = None;
    for gamma in datum.roots() {
        let p = datum
            .project_along_root(gamma, alpha)
            .expect("alpha is a root");
        if p.is_zero() {
            continue;
        }
        let vanishes = shared
            .iter()
            .all(|&r| pairing(&rays[r], &p).expect("compatible") == Rat::zero());
        if !vanishes {
            continue;
        }
        let signs: Vec<Rat> = cone
            .rays
            .iter()
            .map(|&r| pairing(&rays[r], &p).expect("compatible"))
            .collect();
        if !(signs.iter().any(|s| s.is_positive()) && signs.iter().all(|s| !s.is_negative())) {
            continue;
        }
        best = Some(match best {
            None => p,
            Some(prev) => {
                // keep the shorter of two parallel directions
                let ratio = parallel_ratio(&prev, &p).expect("candidates are parallel");
                if ratio > Rat::from_integer(1) {
                    p
                } else {
                    prev
                }
            }
        });
    }
    best
}

/// If `a = t * b` with t > 0, return t.
pub(crate) fn parallel_ratio(a: &Character, b: &Character) -> Option<Rat> {
    let mut ratio = None;
    for (x, y) in a.coords().iter().zip(b.coords()) {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => continue,
            (false, false) => {
                let t = *x / *y;
                if let Some(r) = ratio {
                    if r != t {
                        return None;
                    }
                } else {
                    ratio = Some(t);
                }
            }
            _ => return None,
        }
    }
    ratio.filter(|t| t.is_positive())
}

/// A root datum together with its Weyl fan.
#[derive(Debug, Clone)]
pub struct Variety {
    pub datum: RootDatum,
    pub fan: Fan,
}

impl Variety {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self, Error> {
        let datum = RootDatum::new(kind, n)?;
        let fan = build_weyl_fan(&datum);
        Ok(Variety { datum, fan })
    }

    pub fn name(&self) -> String {
        crate::root_system::datum_name(self.datum.kind(), self.datum.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::datum_name;
    use std::collections::BTreeSet;

    fn variety(kind: GroupKind, n: usize) -> Variety {
        Variety::new(kind, n).unwrap()
    }

    #[test]
    fn cone_counts() {
        assert_eq!(variety(GroupKind::SLn, 3).fan.cones.len(), 6);
        assert_eq!(variety(GroupKind::SLn, 4).fan.cones.len(), 24);
        assert_eq!(variety(GroupKind::G2, 3).fan.cones.len(), 12);
    }

    #[test]
    fn ray_count_is_two_to_n_minus_two() {
        for n in 2..=5 {
            let v = variety(GroupKind::SLn, n);
            assert_eq!(v.fan.rays.len(), (1usize << n) - 2);
        }
    }

    #[test]
    fn g2_rays_match_fixed_coordinates() {
        let v = variety(GroupKind::G2, 3);
        let expect = Cocharacter::new_modded(GroupKind::G2, &[1, 0, -1]);
        assert_eq!(v.fan.rays[1], expect);
        assert_eq!(
            v.fan.rays[0],
            Cocharacter::new_modded(GroupKind::G2, &[1, 0, 0])
        );
        for i in 0..6 {
            let neg: Vec<i64> = v.fan.rays[i].coords().iter().map(|c| -c).collect();
            assert_eq!(
                v.fan.rays[i + 6],
                Cocharacter::new_modded(GroupKind::G2, &neg)
            );
        }
    }

    #[test]
    fn locate_cone_examples() {
        let v = variety(GroupKind::SLn, 3);
        let target: Vec<Rat> = [1, 0, -1].iter().map(|&c| Rat::from_integer(c)).collect();
        let ci = v.fan.locate_cone(&target);
        let rays: BTreeSet<Vec<i64>> = v.fan.cones[ci]
            .rays
            .iter()
            .map(|&r| v.fan.rays[r].coords().to_vec())
            .collect();
        // L1 and -L3 (canonical representatives)
        let expect: BTreeSet<Vec<i64>> = [vec![1, 0, 0], vec![1, 1, 0]].into_iter().collect();
        assert_eq!(rays, expect);

        // the origin lies in every cone; locate returns some cone containing it
        let zero = vec![Rat::zero(); 3];
        let _ = v.fan.locate_cone(&zero);

        // G2: v2 lies in sigma_1 or sigma_2
        let g2 = variety(GroupKind::G2, 3);
        let v2: Vec<Rat> = [1, 0, -1].iter().map(|&c| Rat::from_integer(c)).collect();
        let ci = g2.fan.locate_cone(&v2);
        assert!(matches!(
            g2.fan.cones[ci].id,
            ConeId::Cyclic(1) | ConeId::Cyclic(2)
        ));
    }

    #[test]
    fn sl3_adjacency_matches_listing() {
        // sigma_1 = <L1, -L3> neighbors sigma_2 = <-L3, L2> and sigma_6 = <-L2, L1>
        let v = variety(GroupKind::SLn, 3);
        let s1 = v.fan.cone_index(&ConeId::Ordering(vec![1, 2])).unwrap();
        let neighbors: BTreeSet<String> = v.fan.adjacency[s1]
            .iter()
            .map(|w| v.fan.cones[w.other].id.to_string())
            .collect();
        let expect: BTreeSet<String> = ["2,1", "1,3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(neighbors, expect);
    }

    #[test]
    fn g2_adjacency_is_cyclic() {
        let v = variety(GroupKind::G2, 3);
        let s1 = v.fan.cone_index(&ConeId::Cyclic(1)).unwrap();
        let neighbors: BTreeSet<String> = v.fan.adjacency[s1]
            .iter()
            .map(|w| v.fan.cones[w.other].id.to_string())
            .collect();
        let expect: BTreeSet<String> = ["2", "12"].iter().map(|s| s.to_string()).collect();
        assert_eq!(neighbors, expect);
    }

    #[test]
    fn sl4_every_cone_has_three_neighbors() {
        let v = variety(GroupKind::SLn, 4);
        for adj in &v.fan.adjacency {
            assert_eq!(adj.len(), 3);
        }
    }

    #[test]
    fn walls_share_rank_minus_one_rays_and_are_symmetric() {
        for v in [variety(GroupKind::SLn, 4), variety(GroupKind::G2, 3)] {
            for (a, adj) in v.fan.adjacency.iter().enumerate() {
                for w in adj {
                    assert_eq!(w.shared.len(), v.fan.rank - 1);
                    assert!(v.fan.adjacency[w.other].iter().any(|x| x.other == a));
                }
            }
        }
    }

    #[test]
    fn wall_roots_vanish_on_shared_rays_and_flip_sign() {
        let v = variety(GroupKind::SLn, 4);
        for (a, adj) in v.fan.adjacency.iter().enumerate() {
            for w in adj {
                let ints = w.direction.to_ints().unwrap();
                for &r in &w.shared {
                    assert_eq!(pair_ints(&v.fan.rays[r], &ints), 0);
                }
                // positive somewhere on cone a, negative somewhere on the other
                assert!(v.fan.cones[a]
                    .rays
                    .iter()
                    .any(|&r| pair_ints(&v.fan.rays[r], &ints) > 0));
                assert!(v.fan.cones[w.other]
                    .rays
                    .iter()
                    .any(|&r| pair_ints(&v.fan.rays[r], &ints) < 0));
                // opposite crossing carries the negated root
                let back = v.fan.adjacency[w.other]
                    .iter()
                    .find(|x| x.other == a)
                    .unwrap();
                assert_eq!(back.direction, w.direction.neg());
            }
        }
    }

    #[test]
    fn maximal_cones_are_unimodular() {
        // rays of each cone extend to a basis: determinant of the square
        // system (rays + all-ones column) is +-1
        for v in [
            variety(GroupKind::SLn, 3),
            variety(GroupKind::SLn, 4),
            variety(GroupKind::G2, 3),
        ] {
            let n = v.datum.n();
            for cone in &v.fan.cones {
                let mut a = vec![vec![Rat::zero(); n]; n];
                for (j, &r) in cone.rays.iter().enumerate() {
                    for (i, &c) in v.fan.rays[r].coords().iter().enumerate() {
                        a[i][j] = Rat::from_integer(c);
                    }
                }
                for row in a.iter_mut() {
                    row[n - 1] = Rat::from_integer(1);
                }
                let det = det_rat(&a);
                assert!(det == Rat::from_integer(1) || det == Rat::from_integer(-1));
            }
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn det_rat(a: &[Vec<Rat>]) -> Rat {
        let n = a.len();
        let mut m: Vec<Vec<Rat>> = a.to_vec();
        let mut det = Rat::from_integer(1);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                m.swap(col, p);
                det = -det;
            }
            det *= m[col][col];
            let inv = m[col][col];
            for c in col..n {
                m[col][c] /= inv;
            }
            for r in col + 1..n {
                let f = m[r][col];
                if !f.is_zero() {
                    for c in col..n {
                        let sub = f * m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        det
    }

    #[test]
    fn subfan_sl4_matches_remark_listing() {
        // [L3 - L4 = 0] in SL4 has rays L1, -L3-L4, L2, -L1, L3+L4, -L2
        let v = variety(GroupKind::SLn, 4);
        let beta = Character::from_ints(GroupKind::SLn, &[0, 0, 1, -1]);
        let sub = divisor_subfan(&v.datum, &v.fan, &beta).unwrap();
        assert_eq!(sub.rank, 2);
        assert_eq!(sub.cones.len(), 6);
        let got: BTreeSet<Vec<i64>> = sub.rays.iter().map(|r| r.coords().to_vec()).collect();
        let expect: BTreeSet<Vec<i64>> = [
            vec![1, 0, 0, 0], // L1
            vec![0, 1, 0, 0], // L2
            vec![1, 1, 0, 0], // -L3-L4
            vec![0, 0, 1, 1].as_slice().to_vec(),
            vec![0, 1, 1, 1], // -L1
            vec![1, 0, 1, 1], // -L2
        ]
        .into_iter()
        .map(|c| {
            Cocharacter::new_modded(GroupKind::SLn, &c)
                .coords()
                .to_vec()
        })
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn subfan_g2_short_root_is_one_dimensional() {
        let v = variety(GroupKind::G2, 3);
        let alpha = Character::from_ints(GroupKind::G2, &[1, -1, 0]);
        let sub = divisor_subfan(&v.datum, &v.fan, &alpha).unwrap();
        assert_eq!(sub.rank, 1);
        assert_eq!(sub.cones.len(), 2);
        assert_eq!(sub.rays.len(), 2);
        // the two rays are +-v3
        let got: BTreeSet<Vec<i64>> = sub.rays.iter().map(|r| r.coords().to_vec()).collect();
        let expect: BTreeSet<Vec<i64>> = [[0i64, 0, -1], [0, 0, 1]]
            .iter()
            .map(|c| Cocharacter::new_modded(GroupKind::G2, c).coords().to_vec())
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn subfan_sl3_is_the_pair_of_opposite_rays() {
        let v = variety(GroupKind::SLn, 3);
        let alpha = Character::from_ints(GroupKind::SLn, &[1, -1, 0]);
        let sub = divisor_subfan(&v.datum, &v.fan, &alpha).unwrap();
        assert_eq!(sub.cones.len(), 2);
        let got: BTreeSet<Vec<i64>> = sub.rays.iter().map(|r| r.coords().to_vec()).collect();
        // +-(L1+L2)
        let expect: BTreeSet<Vec<i64>> = [[1i64, 1, 0], [-1, -1, 0]]
            .iter()
            .map(|c| Cocharacter::new_modded(GroupKind::SLn, c).coords().to_vec())
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn subfan_cones_pair_to_zero_with_alpha() {
        let v = variety(GroupKind::SLn, 4);
        for alpha in v.datum.roots() {
            let ints = alpha.to_ints().unwrap();
            let sub = divisor_subfan(&v.datum, &v.fan, alpha).unwrap();
            for ray in &sub.rays {
                assert_eq!(pair_ints(ray, &ints), 0);
            }
        }
    }

    #[test]
    fn datum_name_matches() {
        assert_eq!(datum_name(GroupKind::SLn, 3), "SL:3");
        assert_eq!(variety(GroupKind::G2, 3).name(), "G2");
    }
}
