//! Finite groups as Cayley tables, with subgroup and quotient machinery,
//! linear characters, bicharacters, and automorphism enumeration.
//!
//! Elements are dense indices `0..n-1` and the identity is always index 0, so
//! every verification sweep is a constant-time table lookup.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::GroupError;
use crate::scalar::PhaseExp;

/// Orders above this bound make generator-image searches (automorphisms,
/// bicharacters, hom enumeration) too expensive for desk use.
pub const MAX_SEARCH_ORDER: usize = 16;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        // labels are display-only
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from a Cayley table, validating every invariant:
    /// index 0 acts as a two-sided identity, the table is associative, and
    /// every element has an inverse.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(GroupError::InvalidTable("table is not square".into()));
            }
            for &e in row {
                if e >= n {
                    return Err(GroupError::InvalidTable(format!(
                        "entry {e} out of range for order {n}"
                    )));
                }
                flat.push(e);
            }
        }
        for j in 0..n {
            if flat[j] != j || flat[j * n] != j {
                return Err(GroupError::InvalidTable(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if flat[flat[i * n + j] * n + k] != flat[i * n + flat[j * n + k]] {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            match (0..n).find(|&j| flat[i * n + j] == 0) {
                Some(j) => inverse[i] = j,
                None => {
                    return Err(GroupError::InvalidTable(format!(
                        "element {i} has no inverse"
                    )))
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(GroupError::InvalidTable(
                        "label count does not match order".into(),
                    ));
                }
                l
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Left conjugation x g x⁻¹.
    #[inline]
    pub fn conj_left(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    /// Right conjugation x⁻¹ g x.
    #[inline]
    pub fn conj_right(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |e, g| num::integer::lcm(e, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// All z with z x = x z for every x.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        members.contains(&0)
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| members.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        if !self.is_subgroup(set) {
            return false;
        }
        let members: BTreeSet<usize> = set.iter().copied().collect();
        (0..self.order).all(|x| members.iter().all(|&a| members.contains(&self.conj_left(x, a))))
    }

    pub fn is_abelian_on(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&a| set.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    /// Greedy minimal generating set: scan elements in index order, keeping
    /// those that enlarge the generated subgroup.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = vec![0usize];
        for g in 1..self.order {
            if !span.contains(&g) {
                gens.push(g);
                span = self.subgroup_generated(&gens);
                if span.len() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Every subgroup, each as a sorted element list, in deterministic order.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        known.insert(vec![0]);
        let mut frontier = vec![vec![0usize]];
        while let Some(sub) = frontier.pop() {
            for g in 1..self.order {
                if sub.contains(&g) {
                    continue;
                }
                let mut gens = sub.clone();
                gens.push(g);
                let bigger = self.subgroup_generated(&gens);
                if known.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        known.into_iter().collect()
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.mul(
                    self.mul(self.inv(a), self.inv(b)),
                    self.mul(a, b),
                );
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_generated(&comms)
    }

    /// Quotient by a verified normal subgroup, together with the canonical
    /// projection. The identity coset gets index 0.
    pub fn quotient_by_normal(
        self: &Arc<FiniteGroup>,
        normal: &[usize],
    ) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
        if !self.is_subgroup(normal) {
            return Err(GroupError::NotASubgroup);
        }
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let members: BTreeSet<usize> = normal.iter().copied().collect();
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &a in &members {
                coset_of[self.mul(g, a)] = idx;
            }
        }
        let q = reps.len();
        let mut table = vec![vec![0usize; q]; q];
        for (i, &r) in reps.iter().enumerate() {
            for (j, &s) in reps.iter().enumerate() {
                table[i][j] = coset_of[self.mul(r, s)];
            }
        }
        let labels: Vec<String> = reps.iter().map(|&r| format!("[{}]", self.label(r))).collect();
        let quotient = Arc::new(FiniteGroup::from_table(table, Some(labels))?);
        let proj = GroupHom::new(self.clone(), quotient.clone(), coset_of)?;
        Ok((quotient, proj))
    }

    /// All multiplicative linear characters, in a deterministic order. The
    /// count is the index of the commutator subgroup.
    pub fn linear_characters(self: &Arc<FiniteGroup>) -> Vec<Character> {
        let gens = self.minimal_generators();
        let candidates: Vec<Vec<PhaseExp>> = gens
            .iter()
            .map(|&g| {
                let d = self.element_order(g) as i64;
                (0..d).map(|k| PhaseExp::new(k, d)).collect()
            })
            .collect();
        let index_sets: Vec<Vec<usize>> =
            candidates.iter().map(|c| (0..c.len()).collect()).collect();
        let mut found: BTreeSet<Vec<PhaseExp>> = BTreeSet::new();
        for choice in cartesian(&index_sets) {
            if let Some(values) = self.propagate_phase_map(&gens, &choice, &candidates) {
                found.insert(values);
            }
        }
        found
            .into_iter()
            .map(|values| Character {
                group: self.clone(),
                values,
            })
            .collect()
    }

    /// Assigns a phase to every element from phases on generators by closing
    /// under multiplication; returns None on conflict or non-multiplicativity.
    fn propagate_phase_map(
        &self,
        gens: &[usize],
        choice: &[usize],
        candidates: &[Vec<PhaseExp>],
    ) -> Option<Vec<PhaseExp>> {
        let mut values: Vec<Option<PhaseExp>> = vec![None; self.order];
        values[0] = Some(PhaseExp::zero());
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            let vx = values[x].clone().unwrap();
            for (i, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let vy = vx.mul(&candidates[i][choice[i]]);
                match &values[y] {
                    None => {
                        values[y] = Some(vy);
                        queue.push(y);
                    }
                    Some(existing) => {
                        if *existing != vy {
                            return None;
                        }
                    }
                }
            }
        }
        let values: Vec<PhaseExp> = values.into_iter().map(Option::unwrap).collect();
        for a in 0..self.order {
            for b in 0..self.order {
                if values[self.mul(a, b)] != values[a].mul(&values[b]) {
                    return None;
                }
            }
        }
        Some(values)
    }

    /// Assigns a target element to every source element from images of
    /// generators; returns None on conflict.
    fn propagate_element_map(
        &self,
        gens: &[usize],
        images: &[usize],
        target: &FiniteGroup,
    ) -> Option<Vec<usize>> {
        let mut image: Vec<Option<usize>> = vec![None; self.order];
        image[0] = Some(0);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            let ix = image[x].unwrap();
            for (i, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let iy = target.mul(ix, images[i]);
                match image[y] {
                    None => {
                        image[y] = Some(iy);
                        queue.push(y);
                    }
                    Some(existing) => {
                        if existing != iy {
                            return None;
                        }
                    }
                }
            }
        }
        let image: Vec<usize> = image.into_iter().map(Option::unwrap).collect();
        for a in 0..self.order {
            for b in 0..self.order {
                if image[self.mul(a, b)] != target.mul(image[a], image[b]) {
                    return None;
                }
            }
        }
        Some(image)
    }
}

/// ℤ_n with table[i][j] = (i + j) mod n.
pub fn build_cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group order must be positive");
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "c".to_string(),
            _ => format!("c{i}"),
        })
        .collect();
    FiniteGroup::from_table(table, Some(labels)).expect("cyclic table is a group")
}

pub fn build_trivial() -> FiniteGroup {
    build_cyclic(1)
}

/// Componentwise product on pairs, row-major: (x, y) ↦ x·|b| + y.
pub fn build_direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![vec![0usize; n]; n];
    for x1 in 0..na {
        for y1 in 0..nb {
            for x2 in 0..na {
                for y2 in 0..nb {
                    let i = x1 * nb + y1;
                    let j = x2 * nb + y2;
                    table[i][j] = a.mul(x1, x2) * nb + b.mul(y1, y2);
                }
            }
        }
    }
    let labels = (0..na)
        .flat_map(|x| (0..nb).map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
        .collect();
    FiniteGroup::from_table(table, Some(labels)).expect("product table is a group")
}

/// Dihedral group of order n (n even, n >= 4): rotations a^i at indices
/// 0..n/2, reflections a^i b at indices n/2..n.
pub fn build_dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 4 || n % 2 != 0 {
        return Err(GroupError::InvalidTable(format!(
            "dihedral order must be even and at least 4, got {n}"
        )));
    }
    let m = n / 2;
    let idx = |i: usize, j: usize| i % m + (j % 2) * m;
    let mut table = vec![vec![0usize; n]; n];
    for i1 in 0..m {
        for j1 in 0..2 {
            for i2 in 0..m {
                for j2 in 0..2 {
                    // (a^i1 b^j1)(a^i2 b^j2) = a^{i1 ± i2} b^{j1+j2}
                    let i = if j1 == 0 { i1 + i2 } else { i1 + m - i2 };
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i % m, j1 + j2);
                }
            }
        }
    }
    let rot = |i: usize| match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a{i}"),
    };
    let labels = (0..n)
        .map(|k| {
            let (i, j) = (k % m, k / m);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (_, 0) => rot(i),
                (0, _) => "b".to_string(),
                (_, _) => format!("{}b", rot(i)),
            }
        })
        .collect();
    FiniteGroup::from_table(table, Some(labels))
}

/// A verified group homomorphism, stored by its image vector.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    image: Vec<usize>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom{:?}", self.image)
    }
}

impl GroupHom {
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        image: Vec<usize>,
    ) -> Result<GroupHom, GroupError> {
        if image.len() != source.order() || image.iter().any(|&i| i >= target.order()) {
            return Err(GroupError::NotAHomomorphism);
        }
        if image[0] != 0 {
            return Err(GroupError::NotAHomomorphism);
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            image,
        })
    }

    pub fn identity(group: Arc<FiniteGroup>) -> GroupHom {
        let image = (0..group.order()).collect();
        GroupHom {
            source: group.clone(),
            target: group,
            image,
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn image_vector(&self) -> &[usize] {
        &self.image
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &i in &self.image {
            hit[i] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_surjective()
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&g| self.image[g] == 0).collect()
    }

    /// self ∘ other.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom, GroupError> {
        if other.target.as_ref() != self.source.as_ref() {
            return Err(GroupError::Mismatch(
                "composition endpoints do not match".into(),
            ));
        }
        let image = other.image.iter().map(|&g| self.image[g]).collect();
        GroupHom::new(other.source.clone(), self.target.clone(), image)
    }

    pub fn inverse(&self) -> Result<GroupHom, GroupError> {
        if !self.is_bijective() {
            return Err(GroupError::NotBijective);
        }
        let mut image = vec![0usize; self.target.order()];
        for (g, &h) in self.image.iter().enumerate() {
            image[h] = g;
        }
        GroupHom::new(self.target.clone(), self.source.clone(), image)
    }

    /// v(g)·g⁻¹ central for all g.
    pub fn is_central_automorphism(&self) -> bool {
        if !self.is_bijective() || self.source != self.target {
            return false;
        }
        let center: BTreeSet<usize> = self.source.center().into_iter().collect();
        (0..self.source.order())
            .all(|g| center.contains(&self.source.mul(self.image[g], self.source.inv(g))))
    }
}

/// Complete automorphism list by generator-image search with relation
/// checking; the list is closed under composition by construction.
pub fn enumerate_automorphisms(
    group: &Arc<FiniteGroup>,
) -> Result<Vec<GroupHom>, GroupError> {
    if group.order() > MAX_SEARCH_ORDER {
        return Err(GroupError::SizeBound {
            limit: MAX_SEARCH_ORDER,
            actual: group.order(),
        });
    }
    let gens = group.minimal_generators();
    let mut out = Vec::new();
    let candidate_sets: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let d = group.element_order(g);
            (0..group.order())
                .filter(|&h| group.element_order(h) == d)
                .collect()
        })
        .collect();
    for images in cartesian(&candidate_sets) {
        if let Some(image) = group.propagate_element_map(&gens, &images, group) {
            let mut hit = vec![false; group.order()];
            for &i in &image {
                hit[i] = true;
            }
            if hit.into_iter().all(|h| h) {
                out.push(GroupHom {
                    source: group.clone(),
                    target: group.clone(),
                    image,
                });
            }
        }
    }
    out.sort_by(|a, b| a.image.cmp(&b.image));
    out.dedup_by(|a, b| a.image == b.image);
    Ok(out)
}

pub fn central_automorphisms(group: &Arc<FiniteGroup>) -> Result<Vec<GroupHom>, GroupError> {
    Ok(enumerate_automorphisms(group)?
        .into_iter()
        .filter(GroupHom::is_central_automorphism)
        .collect())
}

/// All homomorphisms source → target by generator-image search.
pub fn enumerate_homs(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
) -> Result<Vec<GroupHom>, GroupError> {
    if source.order() > MAX_SEARCH_ORDER || target.order() > MAX_SEARCH_ORDER {
        return Err(GroupError::SizeBound {
            limit: MAX_SEARCH_ORDER,
            actual: source.order().max(target.order()),
        });
    }
    let gens = source.minimal_generators();
    let mut out = Vec::new();
    let candidate_sets: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let d = source.element_order(g);
            (0..target.order())
                .filter(|&h| d % target.element_order(h) == 0)
                .collect()
        })
        .collect();
    for images in cartesian(&candidate_sets) {
        if let Some(image) = source.propagate_element_map(&gens, &images, target) {
            out.push(GroupHom {
                source: source.clone(),
                target: target.clone(),
                image,
            });
        }
    }
    out.sort_by(|a, b| a.image.cmp(&b.image));
    out.dedup_by(|a, b| a.image == b.image);
    Ok(out)
}

pub fn find_isomorphism(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
) -> Result<Option<GroupHom>, GroupError> {
    if a.order() != b.order() {
        return Ok(None);
    }
    Ok(enumerate_homs(a, b)?.into_iter().find(GroupHom::is_bijective))
}

fn cartesian(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for set in sets {
        let mut next = Vec::with_capacity(out.len() * set.len());
        for prefix in &out {
            for &x in set {
                let mut tuple = prefix.clone();
                tuple.push(x);
                next.push(tuple);
            }
        }
        out = next;
    }
    out
}

/// A multiplicative linear character, stored as root-of-unity exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    group: Arc<FiniteGroup>,
    values: Vec<PhaseExp>,
}

impl Character {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<PhaseExp>) -> Result<Character, GroupError> {
        if values.len() != group.order() || !values[0].is_zero() {
            return Err(GroupError::NotAHomomorphism);
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if values[group.mul(a, b)] != values[a].mul(&values[b]) {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(Character { group, values })
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Character {
        let values = vec![PhaseExp::zero(); group.order()];
        Character { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn value(&self, g: usize) -> &PhaseExp {
        &self.values[g]
    }

    pub fn values(&self) -> &[PhaseExp] {
        &self.values
    }

    pub fn character_order(&self) -> usize {
        self.values
            .iter()
            .map(|v| v.order() as usize)
            .fold(1, num::integer::lcm)
    }

    pub fn mul(&self, other: &Character) -> Character {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.mul(b))
            .collect();
        Character {
            group: self.group.clone(),
            values,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(PhaseExp::is_zero)
    }
}

/// A pairing multiplicative in each slot separately, stored as exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bicharacter {
    left_group: Arc<FiniteGroup>,
    right_group: Arc<FiniteGroup>,
    values: Vec<Vec<PhaseExp>>,
}

impl Bicharacter {
    pub fn new(
        left_group: Arc<FiniteGroup>,
        right_group: Arc<FiniteGroup>,
        values: Vec<Vec<PhaseExp>>,
    ) -> Result<Bicharacter, GroupError> {
        let b = Bicharacter {
            left_group,
            right_group,
            values,
        };
        if !b.is_valid() {
            return Err(GroupError::NotAHomomorphism);
        }
        Ok(b)
    }

    pub fn trivial(left_group: Arc<FiniteGroup>, right_group: Arc<FiniteGroup>) -> Bicharacter {
        let values = vec![vec![PhaseExp::zero(); right_group.order()]; left_group.order()];
        Bicharacter {
            left_group,
            right_group,
            values,
        }
    }

    fn is_valid(&self) -> bool {
        let (nl, nr) = (self.left_group.order(), self.right_group.order());
        if self.values.len() != nl || self.values.iter().any(|row| row.len() != nr) {
            return false;
        }
        for x in 0..nl {
            for y in 0..nl {
                for h in 0..nr {
                    if self.values[self.left_group.mul(x, y)][h]
                        != self.values[x][h].mul(&self.values[y][h])
                    {
                        return false;
                    }
                }
            }
        }
        for g in 0..nl {
            for x in 0..nr {
                for y in 0..nr {
                    if self.values[g][self.right_group.mul(x, y)]
                        != self.values[g][x].mul(&self.values[g][y])
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn left_group(&self) -> &Arc<FiniteGroup> {
        &self.left_group
    }

    pub fn right_group(&self) -> &Arc<FiniteGroup> {
        &self.right_group
    }

    pub fn value(&self, x: usize, y: usize) -> &PhaseExp {
        &self.values[x][y]
    }

    pub fn mul(&self, other: &Bicharacter) -> Bicharacter {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a.mul(b)).collect())
            .collect();
        Bicharacter {
            left_group: self.left_group.clone(),
            right_group: self.right_group.clone(),
            values,
        }
    }
}

/// All bicharacters a × b → U(1), i.e. homomorphisms from a into the
/// character group of b, in deterministic order.
pub fn enumerate_bicharacters(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
) -> Result<Vec<Bicharacter>, GroupError> {
    if a.order() > MAX_SEARCH_ORDER || b.order() > MAX_SEARCH_ORDER {
        return Err(GroupError::SizeBound {
            limit: MAX_SEARCH_ORDER,
            actual: a.order().max(b.order()),
        });
    }
    let chars = b.linear_characters();
    let index: BTreeMap<Vec<PhaseExp>, usize> = chars
        .iter()
        .enumerate()
        .map(|(i, c)| (c.values.clone(), i))
        .collect();
    let trivial = index[&Character::trivial(b.clone()).values];
    // Cayley table of the character group under pointwise product
    let m = chars.len();
    let mut table = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            table[i][j] = index[&chars[i].mul(&chars[j]).values];
        }
    }
    // re-index so the trivial character is 0, as the group constructor needs
    let mut perm: Vec<usize> = (0..m).collect();
    perm.swap(0, trivial);
    let mut rank = vec![0usize; m];
    for (new, &old) in perm.iter().enumerate() {
        rank[old] = new;
    }
    let dual_table: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).map(|j| rank[table[perm[i]][perm[j]]]).collect())
        .collect();
    let dual = Arc::new(FiniteGroup::from_table(dual_table, None)?);
    let mut out = Vec::new();
    for hom in enumerate_homs(a, &dual)? {
        let values: Vec<Vec<PhaseExp>> = (0..a.order())
            .map(|x| chars[perm[hom.apply(x)]].values.clone())
            .collect();
        out.push(Bicharacter {
            left_group: a.clone(),
            right_group: b.clone(),
            values,
        });
    }
    out.sort_by(|p, q| p.values.cmp(&q.values));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    #[test]
    fn cyclic_groups() {
        let t = build_cyclic(1);
        assert_eq!(t.order(), 1);
        let z4 = build_cyclic(4);
        assert_eq!(z4.mul(1, 3), 0);
        assert_eq!(z4.inv(1), 3);
        // element 3 of Z6 generates the unique order-2 subgroup
        let z6 = build_cyclic(6);
        let order2: Vec<usize> = (1..6).filter(|&g| z6.element_order(g) == 2).collect();
        assert_eq!(order2, vec![3]);
        assert_eq!(z6.subgroup_generated(&[3]), vec![0, 3]);
    }

    #[test]
    fn direct_products() {
        let v4 = build_direct_product(&build_cyclic(2), &build_cyclic(2));
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        // trivial × G has the same table as G under the index map
        let z3 = build_cyclic(3);
        let p = build_direct_product(&build_cyclic(1), &z3);
        assert_eq!(p.rows(), z3.rows());
        // Z2 × Z3 is isomorphic to Z6
        let z2z3 = arc(build_direct_product(&build_cyclic(2), &build_cyclic(3)));
        let z6 = arc(build_cyclic(6));
        assert!(find_isomorphism(&z2z3, &z6).unwrap().is_some());
    }

    #[test]
    fn dihedral_group_of_order_8() {
        let d8 = build_dihedral(8).unwrap();
        assert_eq!(d8.order(), 8);
        let (a, b) = (1usize, 4usize);
        assert_ne!(d8.mul(a, b), d8.mul(b, a));
        // bab = a⁻¹
        assert_eq!(d8.mul(d8.mul(b, a), b), d8.inv(a));
        assert_eq!(d8.center(), vec![0, 2]);
        assert_eq!(d8.commutator_subgroup(), vec![0, 2]);
        assert!(build_dihedral(7).is_err());
        assert!(build_dihedral(2).is_err());
    }

    #[test]
    fn center_of_abelian_group_is_everything() {
        let v4 = build_direct_product(&build_cyclic(2), &build_cyclic(2));
        assert_eq!(v4.center(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn quotients() {
        let d8 = arc(build_dihedral(8).unwrap());
        let (q, proj) = d8.quotient_by_normal(&[0, 2]).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2); // Z2 × Z2
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel(), vec![0, 2]);
        let z6 = arc(build_cyclic(6));
        let (q2, _) = z6.quotient_by_normal(&[0, 2, 4]).unwrap();
        assert_eq!(q2.order(), 2);
        let g = arc(build_cyclic(5));
        let (q3, _) = g.quotient_by_normal(&[0]).unwrap();
        assert_eq!(q3.rows(), g.rows());
        // reflections do not form a normal subgroup of D8, nor a subgroup
        assert!(d8.quotient_by_normal(&[0, 4]).is_err() || !d8.is_normal(&[0, 4]));
    }

    #[test]
    fn linear_characters_of_small_groups() {
        let z4 = arc(build_cyclic(4));
        let chars = z4.linear_characters();
        assert_eq!(chars.len(), 4);
        let order2: Vec<_> = chars.iter().filter(|c| c.character_order() == 2).collect();
        assert_eq!(order2.len(), 1);
        assert_eq!(*order2[0].value(1), PhaseExp::new(1, 2));

        let trivial = arc(build_trivial());
        assert_eq!(trivial.linear_characters().len(), 1);

        let d8 = arc(build_dihedral(8).unwrap());
        let chars = d8.linear_characters();
        assert_eq!(chars.len(), 4);
        // characters are class functions: fixed by conjugation
        for c in &chars {
            for g in 0..8 {
                for x in 0..8 {
                    assert_eq!(c.value(d8.conj_right(g, x)), c.value(g));
                }
            }
        }
    }

    #[test]
    fn automorphism_enumeration() {
        let z2 = arc(build_cyclic(2));
        assert_eq!(enumerate_automorphisms(&z2).unwrap().len(), 1);

        let z4 = arc(build_cyclic(4));
        let auts = enumerate_automorphisms(&z4).unwrap();
        assert_eq!(auts.len(), 2);

        let d8 = arc(build_dihedral(8).unwrap());
        let auts = enumerate_automorphisms(&d8).unwrap();
        assert_eq!(auts.len(), 8);
        // inner automorphisms: one per element of G/Z(G)
        let mut inner: Vec<Vec<usize>> = Vec::new();
        for x in 0..8 {
            let image: Vec<usize> = (0..8).map(|g| d8.conj_left(x, g)).collect();
            if !inner.contains(&image) {
                inner.push(image);
            }
        }
        assert_eq!(inner.len(), 4);
        // closure under composition
        for f in &auts {
            for g in &auts {
                let fg = f.compose(g).unwrap();
                assert!(auts.iter().any(|h| h.image_vector() == fg.image_vector()));
            }
        }
        let too_big = arc(build_cyclic(17));
        assert!(enumerate_automorphisms(&too_big).is_err());
    }

    #[test]
    fn central_automorphisms_of_d8() {
        let d8 = arc(build_dihedral(8).unwrap());
        let central = central_automorphisms(&d8).unwrap();
        assert!(!central.is_empty());
        for v in &central {
            assert!(v.is_central_automorphism());
        }
    }

    #[test]
    fn bicharacter_enumeration() {
        let v4 = arc(build_direct_product(&build_cyclic(2), &build_cyclic(2)));
        let bichars = enumerate_bicharacters(&v4, &v4).unwrap();
        assert_eq!(bichars.len(), 16);

        let trivial = arc(build_trivial());
        assert_eq!(enumerate_bicharacters(&trivial, &trivial).unwrap().len(), 1);

        let z6 = arc(build_cyclic(6));
        assert_eq!(enumerate_bicharacters(&z6, &z6).unwrap().len(), 6);
        for b in enumerate_bicharacters(&z6, &z6).unwrap() {
            assert!(b.value(0, 3).is_zero());
            assert!(b.value(3, 0).is_zero());
        }
    }
}
