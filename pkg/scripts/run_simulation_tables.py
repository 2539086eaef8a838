"""
Small script to run the simulation comparisons of MMV reduced classifiers
against the same classifiers on raw features, for every model and size.

Each configuration writes one report per (model, p) pair into the output
directory. Use --reps 400 for the full scale runs.
"""
import argparse
import logging
import os.path

from mmvsdr.classifiers import MethodSpec
from mmvsdr.evaluation import CvPlan, run_experiment
from mmvsdr.file_formats import OutputFormat, write_report
from mmvsdr.optimize import OptimizerConfig
from mmvsdr.simulations import ModelKind, ModelSpec

# (model, n, d, methods)
CONFIGURATIONS = [
    (ModelKind.I, 80, 1, ("mmv+lda", "lda")),
    (ModelKind.II, 80, 1, ("mmv+logistic", "logistic")),
    (ModelKind.III, 160, 2, ("mmv+knn", "knn")),
    (ModelKind.IV, 160, 2, ("mmv+knn", "knn")),
]

DIMENSIONS = {
    ModelKind.I: (50, 200),
    ModelKind.II: (20, 50),
    ModelKind.III: (50, 200),
    ModelKind.IV: (50, 200),
}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("out", help="Output directory")
    p.add_argument("--reps", type=int, default=50)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--models", default="I,II,III,IV")
    ns = p.parse_args(argv)

    logging.basicConfig(level=logging.INFO)
    wanted = set(ModelKind.from_string(s) for s in ns.models.split(","))
    os.makedirs(ns.out, exist_ok=True)

    for model, n, d, names in CONFIGURATIONS:
        if model not in wanted:
            continue
        methods = [MethodSpec.from_string(name) for name in names]
        for dimension in DIMENSIONS[model]:
            spec = ModelSpec(model, n, dimension, ns.seed)
            reports = run_experiment(
                spec, methods, CvPlan(seed=ns.seed), ns.reps,
                opt=OptimizerConfig(restarts=ns.restarts, d=d))
            path = os.path.join(
                ns.out, "model_{0}_p{1}.csv".format(model.value, dimension))
            with open(path, "wt", encoding="utf-8", newline="") as fp:
                write_report(reports, fp, OutputFormat.csv)
            print("{0}: {1}".format(spec, ", ".join(
                "{0}={1:.2f}%".format(r.method, 100 * r.mean)
                for r in reports)))


if __name__ == "__main__":
    main()
