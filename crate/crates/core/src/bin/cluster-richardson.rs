fn main() {
    std::process::exit(cluster_richardson::cli::main_entry());
}
