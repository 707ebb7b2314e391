//! Finite groups as multiplication tables.
//!
//! Elements are `0..order`, the identity is always `0`, and
//! `mul(g, h) = table[g * order + h]`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::{saturating_pow, Limits};
use crate::space::FiniteMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a multiplication table and relabels its identity to `0`.
    ///
    /// Violations are reported with the labels of the input table.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with_limits(table, None, &Limits::default())
    }

    pub fn from_table_with_names(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Self> {
        Self::from_table_with_limits(table, names, &Limits::default())
    }

    pub fn from_table_with_limits(table: &[Vec<usize>], names: Option<Vec<String>>, limits: &Limits) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("table is empty".into()));
        }
        Limits::check("group order", n as u128, limits.group_order as u128)?;
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::MalformedTable(format!("entry ({i},{j}) = {v} is out of range")));
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::MalformedTable(format!("{} names for {n} elements", names.len())));
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(Error::NoIdentity)?;
        for (g, row) in table.iter().enumerate() {
            if !(0..n).any(|h| row[h] == identity && table[h][g] == identity) {
                return Err(Error::NoInverse(g));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }

        // swap labels `identity` and 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
            }
        }
        let names = names.map(|mut names| {
            names.swap(0, identity);
            names
        });
        Ok(FiniteGroup {
            order: n,
            table: flat,
            names,
        })
    }

    /// Builds a group from a table already known to satisfy the axioms with
    /// identity `0`.
    fn from_trusted(order: usize, table: Vec<usize>, names: Vec<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|g| table[g] == g && table[g * order] == g));
        FiniteGroup {
            order,
            table,
            names: Some(names),
        }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        GroupKind::Cyclic(n).build(&Limits::default())
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        GroupKind::Symmetric(n).build(&Limits::default())
    }

    pub fn z2_power(n: usize) -> Result<Self> {
        GroupKind::Z2Power(n).build(&Limits::default())
    }

    /// `G ⊕ H` on pairs, `(a, b)` stored at index `a * |H| + b`.
    pub fn direct_sum(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Self::direct_sum_with_limits(g, h, &Limits::default())
    }

    pub fn direct_sum_with_limits(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<Self> {
        let order = g.order.saturating_mul(h.order);
        Limits::check("group order", order as u128, limits.group_order as u128)?;
        let mut table = vec![0; order * order];
        for x in 0..order {
            let (a, b) = (x / h.order, x % h.order);
            for y in 0..order {
                let (c, d) = (y / h.order, y % h.order);
                table[x * order + y] = g.mul(a, c) * h.order + h.mul(b, d);
            }
        }
        let names = (0..order)
            .map(|x| format!("({},{})", g.name(x / h.order), h.name(x % h.order)))
            .collect();
        Ok(Self::from_trusted(order, table, names))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == 0)
            .expect("validated group has inverses")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, g: usize) -> String {
        match &self.names {
            Some(names) => names[g].clone(),
            None => g.to_string(),
        }
    }

    /// Looks an element up by display name, falling back to its index.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == name) {
                return Some(i);
            }
        }
        name.parse().ok().filter(|&i| i < self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest subset containing `set` and the identity that is closed under
    /// the product.
    pub fn closure<I: IntoIterator<Item = usize>>(&self, set: I) -> BTreeSet<usize> {
        let gens: Vec<usize> = set.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&g| seen[g]).collect()
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// The subgroup generated by all squares. Every homomorphism into a group
    /// of order two is trivial on it, and it is the intersection of the
    /// kernels of all such homomorphisms.
    pub fn squares_subgroup(&self) -> BTreeSet<usize> {
        self.closure((0..self.order).map(|g| self.mul(g, g)))
    }

    /// A non-redundant generating set picked greedily in index order.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure([]);
        for g in 1..self.order {
            if !span.contains(&g) {
                gens.push(g);
                span = self.closure(gens.iter().copied());
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let rest = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| g);
            if self.closure(rest).len() == self.order {
                gens.remove(i);
            } else {
                i += 1;
            }
        }
        gens
    }

    pub fn validate_generating_set(&self, gens: &[usize]) -> Result<GeneratingSet> {
        let set: BTreeSet<usize> = gens.iter().copied().collect();
        if let Some(&g) = set.iter().find(|&&g| g >= self.order) {
            return Err(Error::OutOfRange(g, self.order));
        }
        if set.contains(&0) {
            return Err(Error::IdentityGenerator);
        }
        let span = self.closure(set.iter().copied());
        if span.len() != self.order {
            let missed = (0..self.order).filter(|g| !span.contains(g)).collect();
            return Err(Error::NotGenerating { missed });
        }
        for &g in &set {
            let others: Vec<usize> = set.iter().copied().filter(|&h| h != g).collect();
            if let Some(witness) = self.word_for(g, &others) {
                return Err(Error::Redundant { generator: g, witness });
            }
        }
        Ok(GeneratingSet {
            elements: set.into_iter().collect(),
        })
    }

    /// Shortest word over `letters` whose product is `target`, if any.
    fn word_for(&self, target: usize, letters: &[usize]) -> Option<Vec<usize>> {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.order];
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            if x == target {
                let mut word = Vec::new();
                let mut cur = x;
                while let Some((prev, letter)) = parent[cur] {
                    word.push(letter);
                    cur = prev;
                }
                word.reverse();
                return Some(word);
            }
            for &s in letters {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, s));
                    queue.push_back(y);
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self, codomain: &FiniteGroup, map: &FiniteMap) -> bool {
        let v = map.values();
        map.dom_size() == self.order
            && map.cod_size() == codomain.order
            && (0..self.order).all(|a| (0..self.order).all(|b| v[self.mul(a, b)] == codomain.mul(v[a], v[b])))
    }
}

/// A validated non-redundant generating set (identity excluded), sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    elements: Vec<usize>,
}

impl GeneratingSet {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

/// All homomorphisms `G -> H`, sorted lexicographically by their values.
pub fn enumerate_homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<FiniteMap>> {
    enumerate_homomorphisms_with_limits(g, h, &Limits::default())
}

pub fn enumerate_homomorphisms_with_limits(
    g: &FiniteGroup,
    h: &FiniteGroup,
    limits: &Limits,
) -> Result<Vec<FiniteMap>> {
    let gens = g.greedy_generators();
    let candidates = saturating_pow(h.order, gens.len());
    Limits::check("homomorphism candidates", candidates, limits.hom_candidates)?;

    // breadth-first spanning tree: each non-identity element reached as parent * gens[i]
    let mut tree: Vec<(usize, usize, usize)> = Vec::with_capacity(g.order);
    let mut seen = vec![false; g.order];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut edges = Vec::new();
    while let Some(x) = queue.pop_front() {
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if seen[y] {
                edges.push((x, i, y));
            } else {
                seen[y] = true;
                tree.push((x, i, y));
                queue.push_back(y);
            }
        }
    }

    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    let mut values = vec![0usize; g.order];
    'assign: loop {
        values[0] = 0;
        for &(x, i, y) in &tree {
            values[y] = h.mul(values[x], images[i]);
        }
        let consistent = edges.iter().all(|&(x, i, y)| values[y] == h.mul(values[x], images[i]));
        if consistent {
            let map = FiniteMap::new(g.order, h.order, values.clone())?;
            if g.is_homomorphism(h, &map) {
                out.push(map);
            }
        }
        // odometer, last generator fastest
        for slot in images.iter_mut().rev() {
            *slot += 1;
            if *slot < h.order {
                continue 'assign;
            }
            *slot = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// Named constructions for the groups used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    /// Symmetric group on `n <= 5` letters.
    Symmetric(usize),
    /// Direct sum of `n` copies of Z2; coordinate 1 is the most significant bit.
    Z2Power(usize),
    DirectSum(Box<GroupKind>, Box<GroupKind>),
}

impl GroupKind {
    pub fn order(&self) -> u128 {
        match self {
            GroupKind::Cyclic(n) => *n as u128,
            GroupKind::Symmetric(n) => (1..=*n as u128)
                .try_fold(1u128, |acc, k| acc.checked_mul(k))
                .unwrap_or(u128::MAX),
            GroupKind::Z2Power(n) if *n >= 128 => u128::MAX,
            GroupKind::Z2Power(n) => 1u128 << n,
            GroupKind::DirectSum(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        if let GroupKind::Symmetric(n) = self {
            Limits::check("symmetric degree", *n as u128, 5)?;
        }
        Limits::check("group order", self.order(), limits.group_order as u128)?;
        match self {
            GroupKind::Cyclic(n) => {
                if *n == 0 {
                    return Err(Error::Invalid("cyclic group of order 0".into()));
                }
                let n = *n;
                let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
                Ok(FiniteGroup::from_trusted(
                    n,
                    table,
                    (0..n).map(|i| i.to_string()).collect(),
                ))
            }
            GroupKind::Z2Power(n) => {
                if *n == 0 {
                    return Err(Error::Invalid("Z2 power of exponent 0".into()));
                }
                let order = 1usize << n;
                let table = (0..order * order).map(|i| (i / order) ^ (i % order)).collect();
                let names = (0..order).map(|x| format!("{x:0width$b}", width = *n)).collect();
                Ok(FiniteGroup::from_trusted(order, table, names))
            }
            GroupKind::Symmetric(n) => Ok(symmetric_group(*n)?),
            GroupKind::DirectSum(a, b) => {
                FiniteGroup::direct_sum_with_limits(&a.build(limits)?, &b.build(limits)?, limits)
            }
        }
    }

    /// The generating set used when a caller does not name one.
    pub fn default_generators(&self) -> Vec<usize> {
        match self {
            GroupKind::Cyclic(1) | GroupKind::Symmetric(1) => vec![],
            GroupKind::Cyclic(_) | GroupKind::Symmetric(2) => vec![1],
            // r and t
            GroupKind::Symmetric(3) => vec![1, 3],
            GroupKind::Symmetric(n) => {
                let perms = permutations(*n);
                let cycle: Vec<usize> = (0..*n).map(|i| (i + 1) % n).collect();
                let mut swap: Vec<usize> = (0..*n).collect();
                swap.swap(0, 1);
                let mut gens = vec![
                    perms.iter().position(|p| *p == cycle).unwrap(),
                    perms.iter().position(|p| *p == swap).unwrap(),
                ];
                gens.sort_unstable();
                gens
            }
            GroupKind::Z2Power(n) => (0..*n).map(|i| 1 << (n - 1 - i)).collect(),
            GroupKind::DirectSum(a, b) => {
                let bo = b.order() as usize;
                let mut gens: Vec<usize> = a.default_generators().into_iter().map(|g| g * bo).collect();
                gens.extend(b.default_generators());
                gens.sort_unstable();
                gens
            }
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupKind::Symmetric(n) => write!(f, "s:{n}"),
            GroupKind::Z2Power(n) => write!(f, "z2^{n}"),
            GroupKind::DirectSum(a, b) => write!(f, "{a}+{b}"),
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn compose(g: &[usize], h: &[usize]) -> Vec<usize> {
    h.iter().map(|&i| g[i]).collect()
}

/// `S_n` with product `(g * h)(i) = g(h(i))`. For `n = 3` the elements are
/// ordered `e, r, r², t, tr, tr²` with `r = (0 1 2)` and `t = (1 2)`;
/// otherwise permutations are listed lexicographically in one-line notation.
fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Invalid("symmetric group on 0 letters".into()));
    }
    let (perms, names): (Vec<Vec<usize>>, Vec<String>) = if n == 3 {
        let e = vec![0, 1, 2];
        let r = vec![1, 2, 0];
        let t = vec![0, 2, 1];
        let r2 = compose(&r, &r);
        let tr = compose(&t, &r);
        let tr2 = compose(&t, &r2);
        (
            vec![e, r, r2, t, tr, tr2],
            ["e", "r", "r2", "t", "tr", "tr2"].map(String::from).to_vec(),
        )
    } else {
        let perms = permutations(n);
        let names = perms
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect())
            .collect();
        (perms, names)
    };
    let order = perms.len();
    let mut table = vec![0; order * order];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let c = compose(pa, pb);
            table[a * order + b] = perms.iter().position(|p| *p == c).unwrap();
        }
    }
    Ok(FiniteGroup::from_trusted(order, table, names))
}
