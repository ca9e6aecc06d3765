#!/usr/bin/env python3

import sys

import localscore
from localscore import steps
from localscore.cli import run


def log_step(manager: localscore.AnalysisManager, step: steps.Step):
    print("{}: {}".format(manager.model.digest[:12], step.description), file=sys.stderr)


if __name__ == "__main__":
    if "--trace-steps" in sys.argv:
        sys.argv.remove("--trace-steps")
        localscore.register_pre_step_callback(log_step)
    sys.exit(run(sys.argv[1:]))
