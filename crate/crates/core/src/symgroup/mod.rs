//! Permutations, standard tableaux, RSK, characters of `S_n`, and the
//! enumerators behind the fine-set families.

mod characters;
mod enumerate;
mod perm;
mod tableau;

pub use characters::{character_table, mn_character};
pub use enumerate::{FineElement, FineFamily, Members, ENUMERATION_CAP};
pub use perm::{coxeter_element, Permutation, Permutations};
pub use tableau::{rsk, rsk_inverse, StandardTableau};

use crate::combinatorics::{prefix_compatible, Composition, SubsetMask};

/// `J ⊆ [n-1]` is μ-unimodal when its trace on every run of `I(μ)` is a prefix of that run.
pub fn is_mu_unimodal(set: SubsetMask, mu: &Composition) -> bool {
    mu.interior().is_ok_and(|interior| prefix_compatible(interior, set))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodality() {
        let des = "936871254".parse::<Permutation>().unwrap().descents();
        assert!(is_mu_unimodal(des, &"4,3,2".parse().unwrap()));
        assert!(!is_mu_unimodal(des, &"5,4".parse().unwrap()));
        let ones: Composition = "1,1,1,1".parse().unwrap();
        for j in SubsetMask::all(3).unwrap() {
            assert!(is_mu_unimodal(j, &ones));
            assert!(is_mu_unimodal(SubsetMask::empty(3).unwrap(), &Composition::from_subset(j, 4).unwrap()));
        }
    }
}
