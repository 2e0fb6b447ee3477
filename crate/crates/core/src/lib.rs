//! Higher Jacobian matrices and ideals, Nash-blowup local algebras, local
//! standard bases, embedded resolution of plane-curve germs and motivic zeta
//! functions, all in exact rational arithmetic.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod groebner;
pub mod ideal;
pub mod jacobian;
pub mod motivic;
pub mod nash;
pub mod poly;
pub mod report;
pub mod resolve;
