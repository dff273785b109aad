//! Translation-invariant Clifford quantum cellular automata as matrices over
//! `F₂[u₁^±1, …, u_d^±1]`.
//!
//! `fpoly` and `symplectic` provide the exact ring and matrix layer,
//! `dynamics` the orbit tools and classifiers, `pauli` the Pauli encoding,
//! and `expectation` the automaton that evaluates expectation values in
//! dressed product states.

pub mod config;
mod cursor;
pub mod dynamics;
pub mod error;
pub mod expectation;
pub mod fpoly;
mod gf2;
pub mod pauli;
pub mod symplectic;
