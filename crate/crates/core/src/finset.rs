//! The skeleton category of finite sets: maps between the sets
//! `{1,..,k}`, selfic surjections and their partition calculus, and the
//! category `Boxfin` of jointly injective selfic spans.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A map of finite sets `{1..dom} -> {1..cod}`.
///
/// Entries of `img` are 1-based; `dom = 0` is the empty map and is legal
/// for every codomain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FinMap {
    dom: usize,
    cod: usize,
    img: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FinSetError {
    BadEntry { index: usize, value: usize, cod: usize },
    BadLength { expected: usize, got: usize },
    NotComposable,
    BadPartition(String),
    NotSelfic,
    NotInjectivePairing,
}

impl fmt::Display for FinSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinSetError::BadEntry { index, value, cod } => {
                write!(f, "entry {} at position {} outside 1..={}", value, index, cod)
            }
            FinSetError::BadLength { expected, got } => {
                write!(f, "image sequence has length {}, expected {}", got, expected)
            }
            FinSetError::NotComposable => write!(f, "maps are not composable"),
            FinSetError::BadPartition(s) => write!(f, "invalid partition: {}", s),
            FinSetError::NotSelfic => write!(f, "leg is not a selfic surjection"),
            FinSetError::NotInjectivePairing => write!(f, "pairing into r x s is not injective"),
        }
    }
}

impl FinMap {
    pub fn new(dom: usize, cod: usize, img: Vec<usize>) -> Result<FinMap, FinSetError> {
        if img.len() != dom {
            return Err(FinSetError::BadLength {
                expected: dom,
                got: img.len(),
            });
        }
        for (i, &v) in img.iter().enumerate() {
            if v == 0 || v > cod {
                return Err(FinSetError::BadEntry {
                    index: i + 1,
                    value: v,
                    cod,
                });
            }
        }
        Ok(FinMap { dom, cod, img })
    }

    pub fn identity(k: usize) -> FinMap {
        FinMap {
            dom: k,
            cod: k,
            img: (1..=k).collect(),
        }
    }

    pub fn constant(dom: usize, cod: usize, value: usize) -> FinMap {
        assert!(value >= 1 && value <= cod);
        FinMap {
            dom,
            cod,
            img: alloc::vec![value; dom],
        }
    }

    pub fn empty(cod: usize) -> FinMap {
        FinMap {
            dom: 0,
            cod,
            img: Vec::new(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    /// Value at a 1-based element of the domain.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1]
    }

    pub fn img(&self) -> &[usize] {
        &self.img
    }

    /// Composition `other . self`, defined when `self.cod == other.dom`.
    pub fn then(&self, other: &FinMap) -> Result<FinMap, FinSetError> {
        if self.cod != other.dom {
            return Err(FinSetError::NotComposable);
        }
        Ok(FinMap {
            dom: self.dom,
            cod: other.cod,
            img: self.img.iter().map(|&v| other.img[v - 1]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.img.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = alloc::vec![false; self.cod];
        for &v in &self.img {
            if seen[v - 1] {
                return false;
            }
            seen[v - 1] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = alloc::vec![false; self.cod];
        for &v in &self.img {
            seen[v - 1] = true;
        }
        seen.iter().all(|&b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom == self.cod && self.is_injective()
    }

    pub fn inverse(&self) -> Option<FinMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut img = alloc::vec![0usize; self.dom];
        for (i, &v) in self.img.iter().enumerate() {
            img[v - 1] = i + 1;
        }
        Some(FinMap {
            dom: self.cod,
            cod: self.dom,
            img,
        })
    }

    /// Surjective with the minimum-of-fiber section increasing.
    ///
    /// Equivalently: the image sequence is a restricted growth string, so
    /// the map is the canonical representative of the partition given by
    /// its fibers.
    pub fn is_selfic(&self) -> bool {
        if !self.is_surjective() {
            return false;
        }
        let mut max_seen = 0usize;
        for &v in &self.img {
            if v > max_seen + 1 {
                return false;
            }
            if v > max_seen {
                max_seen = v;
            }
        }
        true
    }

    /// The partition of `{1..dom}` by fibers; `None` if not surjective.
    pub fn fibers(&self) -> Option<Partition> {
        if !self.is_surjective() {
            return None;
        }
        let mut blocks: Vec<Vec<usize>> = alloc::vec![Vec::new(); self.cod];
        for (i, &v) in self.img.iter().enumerate() {
            blocks[v - 1].push(i + 1);
        }
        Partition::new(self.dom, blocks).ok()
    }

    /// Epi-mono factorization with selfic epi part: `self = inj . selfic`.
    pub fn selfic_factor(&self) -> (FinMap, FinMap) {
        let mut values: Vec<usize> = Vec::new();
        let mut surj_img = Vec::with_capacity(self.dom);
        for &v in &self.img {
            match values.iter().position(|&w| w == v) {
                Some(p) => surj_img.push(p + 1),
                None => {
                    values.push(v);
                    surj_img.push(values.len());
                }
            }
        }
        let r = values.len();
        let surj = FinMap {
            dom: self.dom,
            cod: r,
            img: surj_img,
        };
        let inj = FinMap {
            dom: r,
            cod: self.cod,
            img: values,
        };
        debug_assert!(surj.is_selfic());
        debug_assert!(inj.is_injective());
        (surj, inj)
    }

    /// All maps `{1..dom} -> {1..cod}` in lexicographic order of images.
    pub fn enumerate(dom: usize, cod: usize) -> Vec<FinMap> {
        if dom == 0 {
            return alloc::vec![FinMap::empty(cod)];
        }
        if cod == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = alloc::vec![1usize; dom];
        loop {
            out.push(FinMap {
                dom,
                cod,
                img: cur.clone(),
            });
            let mut j = dom;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if cur[j] < cod {
                    cur[j] += 1;
                    for t in j + 1..dom {
                        cur[t] = 1;
                    }
                    break;
                }
            }
        }
    }
}

/// A partition of `{1..ground}` into disjoint nonempty blocks.
///
/// Blocks are kept sorted internally, ordered by minimum element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(ground: usize, mut blocks: Vec<Vec<usize>>) -> Result<Partition, FinSetError> {
        let mut seen = alloc::vec![false; ground];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(FinSetError::BadPartition(String::from("empty block")));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > ground {
                    return Err(FinSetError::BadPartition(String::from(
                        "element outside ground set",
                    )));
                }
                if seen[x - 1] {
                    return Err(FinSetError::BadPartition(String::from(
                        "blocks are not disjoint",
                    )));
                }
                seen[x - 1] = true;
            }
        }
        if !seen.iter().all(|&b| b) {
            return Err(FinSetError::BadPartition(String::from(
                "blocks do not cover the ground set",
            )));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Partition { ground, blocks })
    }

    pub fn discrete(ground: usize) -> Partition {
        Partition {
            ground,
            blocks: (1..=ground).map(|x| alloc::vec![x]).collect(),
        }
    }

    pub fn indiscrete(ground: usize) -> Partition {
        if ground == 0 {
            return Partition {
                ground,
                blocks: Vec::new(),
            };
        }
        Partition {
            ground,
            blocks: alloc::vec![(1..=ground).collect()],
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// The unique selfic surjection whose fibers are the blocks of `p`.
///
/// Blocks are numbered by minimum element, which is exactly what the
/// selfic condition forces.
pub fn selfic_of_partition(p: &Partition) -> FinMap {
    let mut img = alloc::vec![0usize; p.ground()];
    for (b, block) in p.blocks().iter().enumerate() {
        for &x in block {
            img[x - 1] = b + 1;
        }
    }
    let out = FinMap {
        dom: p.ground(),
        cod: p.len(),
        img,
    };
    debug_assert!(out.is_selfic());
    out
}

/// All selfic surjections `{1..k} ->> {1..l}`, in lexicographic order of
/// image sequences (restricted growth strings with maximum `l`).
pub fn enumerate_selfic(k: usize, l: usize) -> Vec<FinMap> {
    if l > k {
        return Vec::new();
    }
    if k == 0 {
        return alloc::vec![FinMap::empty(0)];
    }
    if l == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = alloc::vec![1usize; k];
    fn rec(cur: &mut Vec<usize>, pos: usize, max_seen: usize, k: usize, l: usize, out: &mut Vec<FinMap>) {
        if pos == k {
            if max_seen == l {
                out.push(FinMap {
                    dom: k,
                    cod: l,
                    img: cur.clone(),
                });
            }
            return;
        }
        let top = core::cmp::min(max_seen + 1, l);
        for v in 1..=top {
            cur[pos] = v;
            rec(cur, pos + 1, core::cmp::max(max_seen, v), k, l, out);
        }
    }
    rec(&mut cur, 0, 0, k, l, &mut out);
    out
}

/// An object of `Boxfin`: a span `r <- k -> s` of selfic surjections whose
/// pairing `k -> r x s` is injective.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BoxObj {
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub p: FinMap,
    pub q: FinMap,
}

/// Which normalization the two legs of a span must satisfy.
///
/// `Selfic` is the real thing; `Surjective` drops the normalization and
/// exists as a negative control for the completeness checker.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LegStyle {
    Selfic,
    Surjective,
}

impl BoxObj {
    pub fn new(p: FinMap, q: FinMap) -> Result<BoxObj, FinSetError> {
        BoxObj::with_style(p, q, LegStyle::Selfic)
    }

    pub fn with_style(p: FinMap, q: FinMap, style: LegStyle) -> Result<BoxObj, FinSetError> {
        if p.dom() != q.dom() {
            return Err(FinSetError::NotComposable);
        }
        let ok = match style {
            LegStyle::Selfic => p.is_selfic() && q.is_selfic(),
            LegStyle::Surjective => p.is_surjective() && q.is_surjective(),
        };
        if !ok {
            return Err(FinSetError::NotSelfic);
        }
        let k = p.dom();
        let mut pairs: Vec<(usize, usize)> = (1..=k).map(|i| (p.apply(i), q.apply(i))).collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(FinSetError::NotInjectivePairing);
        }
        Ok(BoxObj {
            k,
            r: p.cod(),
            s: q.cod(),
            p,
            q,
        })
    }

    pub fn all_empty() -> BoxObj {
        BoxObj {
            k: 0,
            r: 0,
            s: 0,
            p: FinMap::empty(0),
            q: FinMap::empty(0),
        }
    }

    /// The unique `i` with `(p(i), q(i)) = (a, b)`, if any.
    pub fn pairing_preimage(&self, a: usize, b: usize) -> Option<usize> {
        (1..=self.k).find(|&i| self.p.apply(i) == a && self.q.apply(i) == b)
    }
}

/// A morphism of `Boxfin`: a natural transformation of spans.
///
/// `b . p_src = p_dst . a` and `c . q_src = q_dst . a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxMor {
    pub src: BoxObj,
    pub dst: BoxObj,
    pub a: FinMap,
    pub b: FinMap,
    pub c: FinMap,
}

impl BoxMor {
    pub fn new(src: BoxObj, dst: BoxObj, a: FinMap, b: FinMap, c: FinMap) -> Option<BoxMor> {
        if a.dom() != src.k || a.cod() != dst.k {
            return None;
        }
        if b.dom() != src.r || b.cod() != dst.r {
            return None;
        }
        if c.dom() != src.s || c.cod() != dst.s {
            return None;
        }
        let nat_p = src.p.then(&b).ok()? == a.then(&dst.p).ok()?;
        let nat_q = src.q.then(&c).ok()? == a.then(&dst.q).ok()?;
        if nat_p && nat_q {
            Some(BoxMor { src, dst, a, b, c })
        } else {
            None
        }
    }

    pub fn identity(obj: &BoxObj) -> BoxMor {
        BoxMor {
            src: obj.clone(),
            dst: obj.clone(),
            a: FinMap::identity(obj.k),
            b: FinMap::identity(obj.r),
            c: FinMap::identity(obj.s),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.a.is_identity() && self.b.is_identity() && self.c.is_identity()
    }

    /// Componentwise composition `other . self`.
    pub fn then(&self, other: &BoxMor) -> Option<BoxMor> {
        if self.dst != other.src {
            return None;
        }
        Some(BoxMor {
            src: self.src.clone(),
            dst: other.dst.clone(),
            a: self.a.then(&other.a).ok()?,
            b: self.b.then(&other.b).ok()?,
            c: self.c.then(&other.c).ok()?,
        })
    }
}

/// All `BoxObj` with `k <= k_max`, `r <= r_max`, `s <= s_max`, in
/// lexicographic order of `(k, r, s, p, q)`.
pub fn boxfin_objects(k_max: usize, r_max: usize, s_max: usize) -> Vec<BoxObj> {
    boxfin_objects_styled(k_max, r_max, s_max, LegStyle::Selfic)
}

pub fn boxfin_objects_styled(
    k_max: usize,
    r_max: usize,
    s_max: usize,
    style: LegStyle,
) -> Vec<BoxObj> {
    let mut out = Vec::new();
    for k in 0..=k_max {
        for r in 0..=r_max {
            let ps = match style {
                LegStyle::Selfic => enumerate_selfic(k, r),
                LegStyle::Surjective => FinMap::enumerate(k, r)
                    .into_iter()
                    .filter(|f| f.is_surjective())
                    .collect(),
            };
            if ps.is_empty() {
                continue;
            }
            for s in 0..=s_max {
                let qs = match style {
                    LegStyle::Selfic => enumerate_selfic(k, s),
                    LegStyle::Surjective => FinMap::enumerate(k, s)
                        .into_iter()
                        .filter(|f| f.is_surjective())
                        .collect(),
                };
                for p in &ps {
                    for q in &qs {
                        if let Ok(obj) = BoxObj::with_style(p.clone(), q.clone(), style) {
                            out.push(obj);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The unique lift of a pair `(u, v)` of maps between the leg targets to a
/// `Boxfin` morphism, when one exists.
///
/// Injectivity of the target pairing forces the `k`-component, so there is
/// never more than one lift; absence is a legal outcome.
pub fn boxfin_lift(src: &BoxObj, dst: &BoxObj, u: &FinMap, v: &FinMap) -> Option<BoxMor> {
    if u.dom() != src.r || u.cod() != dst.r || v.dom() != src.s || v.cod() != dst.s {
        return None;
    }
    let mut img = Vec::with_capacity(src.k);
    for i in 1..=src.k {
        let target = (u.apply(src.p.apply(i)), v.apply(src.q.apply(i)));
        match dst.pairing_preimage(target.0, target.1) {
            Some(j) => img.push(j),
            None => return None,
        }
    }
    let a = FinMap::new(src.k, dst.k, img).ok()?;
    BoxMor::new(src.clone(), dst.clone(), a, u.clone(), v.clone())
}

/// The full hom-set between two `Boxfin` objects: every pair `(u, v)` that
/// admits a lift contributes exactly one morphism.
pub fn boxfin_morphisms(src: &BoxObj, dst: &BoxObj) -> Vec<BoxMor> {
    let mut out = Vec::new();
    for u in FinMap::enumerate(src.r, dst.r) {
        for v in FinMap::enumerate(src.s, dst.s) {
            if let Some(m) = boxfin_lift(src, dst, &u, &v) {
                out.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fm(dom: usize, cod: usize, img: &[usize]) -> FinMap {
        FinMap::new(dom, cod, img.to_vec()).unwrap()
    }

    #[test]
    fn selfic_basics() {
        assert!(FinMap::identity(3).is_selfic());
        assert!(fm(3, 2, &[1, 1, 2]).is_selfic());
        assert!(!fm(2, 2, &[2, 1]).is_selfic());
        assert!(!fm(2, 2, &[1, 1]).is_selfic()); // not surjective
        assert!(FinMap::empty(0).is_selfic());
        assert!(!FinMap::empty(1).is_selfic());
    }

    #[test]
    fn selfic_of_partition_examples() {
        let p = Partition::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(selfic_of_partition(&p).img(), &[1, 1, 2]);
        assert_eq!(
            selfic_of_partition(&Partition::discrete(4)),
            FinMap::identity(4)
        );
        assert_eq!(
            selfic_of_partition(&Partition::indiscrete(3)).img(),
            &[1, 1, 1]
        );
    }

    #[test]
    fn selfic_and_fibers_are_inverse() {
        for k in 0..=5usize {
            for l in 0..=k {
                for f in enumerate_selfic(k, l) {
                    let part = f.fibers().expect("selfic maps are surjective");
                    assert_eq!(selfic_of_partition(&part), f);
                }
            }
        }
    }

    /// Independent count of partitions of an n-set into l blocks via the
    /// Stirling recurrence.
    fn stirling(n: usize, l: usize) -> u64 {
        if n == 0 && l == 0 {
            return 1;
        }
        if n == 0 || l == 0 || l > n {
            return 0;
        }
        stirling(n - 1, l - 1) + (l as u64) * stirling(n - 1, l)
    }

    #[test]
    fn selfic_counts_match_partition_counts() {
        for k in 0..=6usize {
            for l in 0..=k {
                assert_eq!(
                    enumerate_selfic(k, l).len() as u64,
                    stirling(k, l),
                    "k={} l={}",
                    k,
                    l
                );
            }
        }
        assert_eq!(enumerate_selfic(3, 2).len(), 3);
        assert_eq!(enumerate_selfic(4, 4), vec![FinMap::identity(4)]);
        assert!(enumerate_selfic(2, 3).is_empty());
    }

    #[test]
    fn selfic_list_agrees_with_brute_filter() {
        // second route: filter the full function space
        for k in 0..=5usize {
            for l in 0..=5usize {
                let brute: Vec<FinMap> = FinMap::enumerate(k, l)
                    .into_iter()
                    .filter(|f| f.is_selfic())
                    .collect();
                assert_eq!(enumerate_selfic(k, l), brute, "k={} l={}", k, l);
            }
        }
    }

    #[test]
    fn boxfin_object_counts() {
        let objs = boxfin_objects(2, 2, 2);
        let k2: Vec<_> = objs.iter().filter(|o| o.k == 2).collect();
        assert_eq!(k2.len(), 3);
        // (k=2, r=1, s=1) cannot have injective pairing
        assert!(!objs.iter().any(|o| o.k == 2 && o.r == 1 && o.s == 1));
        assert_eq!(boxfin_objects(0, 0, 0), vec![BoxObj::all_empty()]);
    }

    #[test]
    fn lift_examples() {
        let all_empty = BoxObj::all_empty();
        let id_lift = boxfin_lift(
            &all_empty,
            &all_empty,
            &FinMap::empty(0),
            &FinMap::empty(0),
        )
        .unwrap();
        assert!(id_lift.is_identity());

        // src = (p = id_2 : 2 -> 2, q = const : 2 -> 1), dst all-singleton
        let src = BoxObj::new(FinMap::identity(2), fm(2, 1, &[1, 1])).unwrap();
        let dst = BoxObj::new(FinMap::identity(1), FinMap::identity(1)).unwrap();
        let lift = boxfin_lift(&src, &dst, &fm(2, 1, &[1, 1]), &FinMap::identity(1)).unwrap();
        assert_eq!(lift.a.img(), &[1, 1]);

        // no map into the all-empty object from k >= 1
        assert!(boxfin_lift(&src, &all_empty, &FinMap::empty(0).inverse().unwrap_or(FinMap::empty(0)), &FinMap::empty(0)).is_none());
    }

    #[test]
    fn hom_sets_match_brute_force() {
        // oracle: enumerate all triples (a, b, c) and keep natural ones
        let objs = boxfin_objects(3, 2, 2);
        for src in &objs {
            for dst in &objs {
                let brute: Vec<BoxMor> = FinMap::enumerate(src.k, dst.k)
                    .into_iter()
                    .flat_map(|a| {
                        let src = src.clone();
                        let dst = dst.clone();
                        FinMap::enumerate(src.r, dst.r).into_iter().flat_map(move |b| {
                            let a = a.clone();
                            let src = src.clone();
                            let dst = dst.clone();
                            FinMap::enumerate(src.s, dst.s)
                                .into_iter()
                                .filter_map(move |c| {
                                    BoxMor::new(src.clone(), dst.clone(), a.clone(), b.clone(), c)
                                })
                        })
                    })
                    .collect();
                let by_lift = boxfin_morphisms(src, dst);
                assert_eq!(by_lift.len(), brute.len());
                for m in &by_lift {
                    assert!(brute.contains(m));
                }
            }
        }
    }

    #[test]
    fn lifts_are_unique() {
        // never two distinct a for the same (u, v), exhaustively for k,r,s <= 3
        let objs = boxfin_objects(3, 3, 3);
        for src in &objs {
            for dst in &objs {
                for u in FinMap::enumerate(src.r, dst.r) {
                    for v in FinMap::enumerate(src.s, dst.s) {
                        let mut count = 0;
                        for a in FinMap::enumerate(src.k, dst.k) {
                            if BoxMor::new(src.clone(), dst.clone(), a, u.clone(), v.clone())
                                .is_some()
                            {
                                count += 1;
                            }
                        }
                        assert!(count <= 1, "two lifts for {:?} {:?}", src, dst);
                        assert_eq!(
                            count == 1,
                            boxfin_lift(src, dst, &u, &v).is_some()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn composition_is_associative_and_unital() {
        let objs = boxfin_objects(3, 2, 2);
        let mut homs: Vec<Vec<Vec<BoxMor>>> = Vec::new();
        for a in &objs {
            homs.push(objs.iter().map(|b| boxfin_morphisms(a, b)).collect());
        }
        for (i, a) in objs.iter().enumerate() {
            for (j, _b) in objs.iter().enumerate() {
                for f in &homs[i][j] {
                    assert_eq!(&BoxMor::identity(a).then(f).unwrap(), f);
                    assert_eq!(&f.then(&BoxMor::identity(&f.dst)).unwrap(), f);
                    for (k, _c) in objs.iter().enumerate() {
                        for g in &homs[j][k] {
                            let fg = f.then(g).unwrap();
                            for h in homs[k].iter().flatten() {
                                if h.src == fg.dst {
                                    let left = fg.then(h).unwrap();
                                    let right = f.then(&g.then(h).unwrap()).unwrap();
                                    assert_eq!(left, right);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
