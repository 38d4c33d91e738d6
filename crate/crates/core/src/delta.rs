//! Arithmetic of the simplex category: monotone maps `[n] -> [m]` between
//! finite ordinals, their factorizations, and the elementary face and
//! degeneracy operators everything else is expressed in.

use alloc::vec::Vec;

/// A weakly monotone map `[dom] -> [cod]` between ordinals `[n] = {0,..,n}`.
///
/// Values are 0-based. `img` has length `dom + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DeltaOp {
    dom: usize,
    cod: usize,
    img: Vec<usize>,
}

impl DeltaOp {
    pub fn new(dom: usize, cod: usize, img: Vec<usize>) -> Option<DeltaOp> {
        if img.len() != dom + 1 {
            return None;
        }
        if img.iter().any(|&v| v > cod) {
            return None;
        }
        if img.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        Some(DeltaOp { dom, cod, img })
    }

    pub fn identity(n: usize) -> DeltaOp {
        DeltaOp {
            dom: n,
            cod: n,
            img: (0..=n).collect(),
        }
    }

    /// The coface `delta_i : [n-1] -> [n]` skipping the value `i`.
    pub fn face(n: usize, i: usize) -> DeltaOp {
        assert!(n >= 1 && i <= n);
        DeltaOp {
            dom: n - 1,
            cod: n,
            img: (0..n).map(|j| if j < i { j } else { j + 1 }).collect(),
        }
    }

    /// The codegeneracy `sigma_i : [n+1] -> [n]` repeating the value `i`.
    pub fn degeneracy(n: usize, i: usize) -> DeltaOp {
        assert!(i <= n);
        DeltaOp {
            dom: n + 1,
            cod: n,
            img: (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect(),
        }
    }

    /// The edge `[1] -> [n]` spanning vertices `i, i+1`.
    pub fn edge(n: usize, i: usize) -> DeltaOp {
        assert!(i + 1 <= n);
        DeltaOp {
            dom: 1,
            cod: n,
            img: alloc::vec![i, i + 1],
        }
    }

    /// The vertex `[0] -> [n]` at `i`.
    pub fn vertex(n: usize, i: usize) -> DeltaOp {
        assert!(i <= n);
        DeltaOp {
            dom: 0,
            cod: n,
            img: alloc::vec![i],
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, j: usize) -> usize {
        self.img[j]
    }

    pub fn img(&self) -> &[usize] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.img.iter().enumerate().all(|(j, &v)| j == v)
    }

    pub fn is_injective(&self) -> bool {
        self.img.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        if self.img[0] != 0 || self.img[self.dom] != self.cod {
            return false;
        }
        self.img.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Composition `other . self : [self.dom] -> [other.cod]`.
    pub fn then(&self, other: &DeltaOp) -> DeltaOp {
        assert_eq!(self.cod, other.dom, "non-composable operators");
        DeltaOp {
            dom: self.dom,
            cod: other.cod,
            img: self.img.iter().map(|&v| other.img[v]).collect(),
        }
    }

    /// Epi-mono factorization: `self = inj . surj` with `surj` onto `[k]`
    /// and `inj` injective.
    pub fn epi_mono(&self) -> (DeltaOp, DeltaOp) {
        let mut values: Vec<usize> = self.img.clone();
        values.dedup();
        let k = values.len() - 1;
        let surj_img: Vec<usize> = self
            .img
            .iter()
            .map(|v| values.iter().position(|w| w == v).unwrap())
            .collect();
        let surj = DeltaOp {
            dom: self.dom,
            cod: k,
            img: surj_img,
        };
        let inj = DeltaOp {
            dom: k,
            cod: self.cod,
            img: values,
        };
        (surj, inj)
    }

    /// The elements of `[cod]` missed by an injective operator, descending.
    pub fn missing_desc(&self) -> Vec<usize> {
        debug_assert!(self.is_injective());
        let mut miss: Vec<usize> = (0..=self.cod).filter(|v| !self.img.contains(v)).collect();
        miss.reverse();
        miss
    }

    /// Positions `a` with `img[a] == img[a+1]` (the repeats of a surjection).
    pub fn repeats(&self) -> Vec<usize> {
        (0..self.dom).filter(|&a| self.img[a] == self.img[a + 1]).collect()
    }

    /// All monotone maps `[dom] -> [cod]`, in lexicographic order.
    pub fn enumerate(dom: usize, cod: usize) -> Vec<DeltaOp> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![0usize; dom + 1];
        loop {
            out.push(DeltaOp {
                dom,
                cod,
                img: cur.clone(),
            });
            // next monotone sequence
            let mut j = dom + 1;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if cur[j] < cod {
                    cur[j] += 1;
                    for t in j + 1..=dom {
                        cur[t] = cur[j];
                    }
                    break;
                }
            }
        }
    }

    /// All monotone surjections `[dom] ->> [cod]`.
    pub fn enumerate_surjections(dom: usize, cod: usize) -> Vec<DeltaOp> {
        DeltaOp::enumerate(dom, cod)
            .into_iter()
            .filter(|op| op.is_surjective())
            .collect()
    }

    /// A section of a surjection: minimal preimage of each value.
    pub fn min_section(&self) -> DeltaOp {
        debug_assert!(self.is_surjective());
        let img = (0..=self.cod)
            .map(|v| self.img.iter().position(|&w| w == v).unwrap())
            .collect();
        DeltaOp {
            dom: self.cod,
            cod: self.dom,
            img,
        }
    }
}
