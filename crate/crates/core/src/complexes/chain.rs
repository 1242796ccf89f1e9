use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

use super::{smith_normal_form, IntMatrix, SimplicialComplex};

/// The augmented simplicial chain complex: `boundaries[j]` is
/// `∂_j : C_j → C_{j−1}` with `C_{−1} = ℤ`, so `boundaries[0]` is the
/// augmentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        let dims = c.dimension().map_or(0, |d| d + 1);
        let mut boundaries = Vec::with_capacity(dims);
        let mut augmentation = IntMatrix::zeros(1, c.simplices(0).len());
        for j in 0..augmentation.cols() {
            augmentation.set(0, j, 1);
        }
        boundaries.push(augmentation);
        for d in 1..dims {
            let faces = c.simplices(d - 1);
            let cells = c.simplices(d);
            let mut m = IntMatrix::zeros(faces.len(), cells.len());
            for (j, s) in cells.iter().enumerate() {
                for i in 0..s.len() {
                    let face: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
                    let row = faces.binary_search(&face).expect("complexes are closed under faces");
                    m.set(row, j, if i % 2 == 0 { 1 } else { -1 });
                }
            }
            boundaries.push(m);
        }
        ChainComplex { boundaries }
    }

    /// Checks `∂_{j−1} ∘ ∂_j = 0` in every dimension.
    pub fn check(&self) -> Result<()> {
        for j in 1..self.boundaries.len() {
            let product = self.boundaries[j - 1]
                .checked_mul(&self.boundaries[j])
                .ok_or_else(|| Error::Invariant("overflow composing boundary maps".into()))?;
            if !product.is_zero() {
                return Err(Error::Invariant(format!("boundary of boundary is non-zero in dimension {j}")));
            }
        }
        Ok(())
    }
}

/// `H̃_dim ≅ ℤ^rank ⊕ ⨁ ℤ/t` for `t` in `torsion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub dim: isize,
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H̃{} rank {}", self.dim, self.rank)?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(BigInt::to_string).collect();
            write!(f, " torsion {}", t.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced homology in dimensions `−1 ..= dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub groups: Vec<HomologyGroup>,
}

impl Homology {
    pub fn group(&self, dim: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == dim)
    }

    pub fn rank(&self, dim: isize) -> usize {
        self.group(dim).map_or(0, |g| g.rank)
    }

    /// `Σ (−1)^j rank H̃_j`, which is `χ − 1` for the reduced theory.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.groups.iter().map(|g| if g.dim.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum()
    }
}

pub fn homology(c: &SimplicialComplex) -> Result<Homology> {
    let chain = ChainComplex::from_complex(c);
    chain.check()?;
    let forms: Vec<_> = chain.boundaries.iter().map(smith_normal_form).collect();
    // sizes of C_{-1}, C_0, C_1, ...
    let mut sizes = vec![1];
    sizes.extend(chain.boundaries.iter().map(IntMatrix::cols));
    let mut groups = Vec::with_capacity(sizes.len());
    for (k, &n) in sizes.iter().enumerate() {
        // C_{k-1}: kernel of ∂_{k-1} (zero map below C_{-1}), image of ∂_k
        let out_rank = if k == 0 { 0 } else { forms[k - 1].rank };
        let in_form = forms.get(k);
        let in_rank = in_form.map_or(0, |f| f.rank);
        let torsion = in_form.map_or_else(Vec::new, |f| f.diagonal.iter().filter(|d| !d.is_one()).cloned().collect());
        groups.push(HomologyGroup { dim: k as isize - 1, rank: n - out_rank - in_rank, torsion });
    }
    Ok(Homology { groups })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(n: usize, gens: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_simplices(vec![String::new(); n], gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn basic_spaces() {
        let circle = homology(&complex(3, &[&[0, 1], &[1, 2], &[0, 2]])).unwrap();
        assert_eq!((circle.rank(-1), circle.rank(0), circle.rank(1)), (0, 0, 1));
        let points = homology(&complex(3, &[])).unwrap();
        assert_eq!(points.rank(0), 2);
        let empty = homology(&complex(0, &[])).unwrap();
        assert_eq!(empty.rank(-1), 1);
        let disk = homology(&complex(3, &[&[0, 1, 2]])).unwrap();
        assert!(disk.groups.iter().all(HomologyGroup::is_zero));
    }

    #[test]
    fn projective_plane_has_torsion() {
        // six-vertex triangulation of RP²
        let rp2 = complex(
            6,
            &[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 1, 5],
                &[1, 2, 4],
                &[2, 3, 5],
                &[1, 3, 4],
                &[1, 3, 5],
                &[2, 4, 5],
            ],
        );
        let h = homology(&rp2).unwrap();
        assert_eq!(h.rank(1), 0);
        assert_eq!(h.group(1).unwrap().torsion, [BigInt::from(2)]);
        assert_eq!(h.rank(2), 0);
        assert_eq!(h.reduced_euler_characteristic(), rp2.euler_characteristic() - 1);
    }
}
