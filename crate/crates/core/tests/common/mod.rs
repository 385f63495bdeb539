#![allow(dead_code)]

pub mod translation_cases;
pub mod vocabulary;
