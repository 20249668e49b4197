//! Independent function models of the shape categories and the fuzzed
//! normal-form checks built on them.

#![allow(dead_code)]

pub mod model;
pub mod normal_forms;
