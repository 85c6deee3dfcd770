//! Where `det D` and `cof D` vanish for a single block, the sign of
//! `lambda`, and generators for negative- and zero-`lambda` instances.

mod enumerate;
mod families;
mod verdict;

pub use enumerate::{compositions_up_to, sorted_specs};
pub use families::{
    family_cases, lambda_sign_brute, negative_lambda_classifier, negative_lambda_family, tail, zero_lambda_multiblock,
    FamilyCase, TailPattern, ZeroLambdaFamily,
};
pub use verdict::{
    classify, classify_cof, classify_det, f_value, lambda_single, LambdaSignReport, ReciprocalWitness, Sign,
    SingularityCase, SingularityVerdict, VanishingVerdict,
};
