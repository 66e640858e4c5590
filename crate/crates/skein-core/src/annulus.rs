//! placeholder
pub struct AnnulusElement;
pub struct MonomialKey;
