macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(laurent_arithmetic, "laurent_arithmetic.rs", laurent_arithmetic_runs);
example!(quiver_mutation, "quiver_mutation.rs", quiver_mutation_runs);
example!(rank2_pentagon, "rank2_pentagon.rs", rank2_pentagon_runs);
example!(cluster_morphisms, "cluster_morphisms.rs", cluster_morphisms_runs);
example!(weyl_words, "weyl_words.rs", weyl_words_runs);
example!(richardson_seeds, "richardson_seeds.rs", richardson_seeds_runs);
example!(minor_oracle, "minor_oracle.rs", minor_oracle_runs);
