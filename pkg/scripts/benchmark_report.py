"""Print the benchmark vs proposed comparison table from the stored presets."""

from patchlab.report import benchmark_report, format_report, paper_benchmark_metrics, paper_proposed_metrics

if __name__ == "__main__":
    print(format_report(benchmark_report(paper_benchmark_metrics(), paper_proposed_metrics())), end="")
