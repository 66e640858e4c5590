//! placeholder
pub struct RelativeElement;
pub struct RelativeKey;
