"""Experiment orchestration: instance generation and seeded run execution."""

from partition_gsemo.experiment.runner import (
    RunTask,
    execute_task,
    generate_instances,
    instance_specs,
    run_experiment,
)

__all__ = [
    "RunTask",
    "execute_task",
    "generate_instances",
    "instance_specs",
    "run_experiment",
]
