"""
Experiment orchestration.

Workflow:
1. Expand the configured grid into InstanceSpecs (seeds derived from the master seed)
2. Generate and save every instance bundle under <output>/instances/<instance_id>/
3. Queue one GREEDY task and `repeats` GSEMO tasks per instance, skipping keys
   already in the result store
4. Execute tasks (in a process pool when parallelism > 1); only the orchestrating
   process appends to the store
5. Compact the store so its content does not depend on completion order

Seeds:
    graph      derive_seed(master, "graph", n, repr(density), g)
    partition  derive_seed(master, "partition", n, repr(density), g, k)
    gsemo run  derive_seed(master, "gsemo", instance_id, r)
"""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, List, Optional

from partition_gsemo.algorithms.greedy import GREEDY
from partition_gsemo.algorithms.gsemo import GSEMO
from partition_gsemo.algorithms.models import GsemoParams, RunRecord
from partition_gsemo.algorithms.registry import make_solver
from partition_gsemo.algorithms.seeding import derive_seed
from partition_gsemo.config.experiment_config import ExperimentConfig
from partition_gsemo.core.models import OracleCounter
from partition_gsemo.instances.bundle import InstanceBundle, load_bundle, save_bundle
from partition_gsemo.instances.generator import build_instance
from partition_gsemo.instances.models import ConstraintScheme, InstanceMeta, InstanceSpec
from partition_gsemo.objectives.max_cut import MaxCutFunction
from partition_gsemo.storage.result_store import ResultStore

logger = logging.getLogger(__name__)


def instance_specs(config: ExperimentConfig) -> List[InstanceSpec]:
    """All instances of the configured grid, in generation order."""
    specs: List[InstanceSpec] = []
    master = config.master_seed

    for n in config.n_values:
        for density in config.densities:
            for g in range(config.graphs_per_setting):
                graph_seed = derive_seed(master, "graph", n, repr(density), g)

                for fraction in config.cardinality_fractions:
                    specs.append(
                        InstanceSpec(
                            n=n,
                            density=density,
                            scheme=ConstraintScheme.cardinality(fraction),
                            graph_seed=graph_seed,
                            edge_universe=config.edge_universe,
                        )
                    )
                for k in config.partition_ks:
                    specs.append(
                        InstanceSpec(
                            n=n,
                            density=density,
                            scheme=ConstraintScheme.partition(k),
                            graph_seed=graph_seed,
                            partition_seed=derive_seed(master, "partition", n, repr(density), g, k),
                            edge_universe=config.edge_universe,
                        )
                    )
    return specs


def _generate_one(spec: InstanceSpec, instances_dir: Path) -> InstanceMeta:
    graph, constraint, meta = build_instance(spec)
    bundle = InstanceBundle(objective=MaxCutFunction(graph), constraint=constraint, meta=meta)
    save_bundle(bundle, instances_dir / meta.instance_id)
    return meta


def generate_instances(config: ExperimentConfig) -> List[InstanceMeta]:
    """
    Generate and save every instance of the grid.

    Bundles are rewritten on every call; generation is deterministic, so the
    files are byte-identical for the same master seed.

    Returns:
        Metadata of the generated instances, in generation order
    """
    specs = instance_specs(config)
    instances_dir = config.instances_dir
    instances_dir.mkdir(parents=True, exist_ok=True)
    logger.info(f"Generating {len(specs)} instances into {instances_dir}")

    if config.parallelism == 1:
        metas = [_generate_one(spec, instances_dir) for spec in specs]
    else:
        with ProcessPoolExecutor(max_workers=config.parallelism) as executor:
            metas = list(executor.map(_generate_one, specs, [instances_dir] * len(specs)))

    logger.info(f"Generated {len(metas)} instances")
    return metas


@dataclass(frozen=True)
class RunTask:
    """One unit of work: a single algorithm run on a single instance."""

    instance_dir: Path
    instance_id: str
    algorithm: str
    repeat: int
    master_seed: int
    config: ExperimentConfig

    @property
    def key(self):
        return (self.instance_id, self.algorithm, self.repeat)


@lru_cache(maxsize=8)
def _cached_bundle(instance_dir: Path) -> InstanceBundle:
    return load_bundle(instance_dir)


def execute_task(task: RunTask) -> RunRecord:
    """Run one task and return its keyed RunRecord."""
    bundle = _cached_bundle(task.instance_dir)
    f, m = bundle.objective, bundle.constraint
    params = None
    if task.algorithm == GSEMO:
        params = GsemoParams(
            iterations=task.config.iterations_for(m),
            seed=derive_seed(task.master_seed, "gsemo", task.instance_id, task.repeat),
        )
    solver = make_solver(task.algorithm, params, trace_stride=task.config.stride_for(m.n))
    record = solver.solve(f, m, OracleCounter())

    return record.model_copy(update={"instance_id": task.instance_id, "repeat": task.repeat})


def _tasks(
    config: ExperimentConfig, metas: Iterable[InstanceMeta], store: ResultStore
) -> List[RunTask]:
    tasks: List[RunTask] = []
    skipped = 0
    for meta in metas:
        instance_dir = config.instances_dir / meta.instance_id
        keys = [(GREEDY, 0)] + [(GSEMO, r) for r in range(config.repeats)]
        for algorithm, repeat in keys:
            if store.has_run((meta.instance_id, algorithm, repeat)):
                skipped += 1
                continue
            tasks.append(
                RunTask(
                    instance_dir=instance_dir,
                    instance_id=meta.instance_id,
                    algorithm=algorithm,
                    repeat=repeat,
                    master_seed=config.master_seed,
                    config=config,
                )
            )
    if skipped:
        logger.info(f"Skipping {skipped} runs already in the store")
    return tasks


def _log_progress(done: int, total: int):
    step = max(total // 10, 1)
    if done % step == 0 or done == total:
        logger.info(f"Completed {done}/{total} runs")


def run_experiment(config: ExperimentConfig, store: Optional[ResultStore] = None) -> ResultStore:
    """
    Generate the grid and run GREEDY once and GSEMO `repeats` times per instance.

    Resumable: runs whose key is already stored are not executed again.

    Returns:
        The compacted result store with instances x (1 + repeats) runs
    """
    if store is None:
        store = ResultStore(config.store_path)
    metas = generate_instances(config)
    for meta in metas:
        store.add_instance(meta)

    tasks = _tasks(config, metas, store)
    logger.info(
        f"Running {len(tasks)} tasks on {len(metas)} instances "
        f"(repeats={config.repeats}, parallelism={config.parallelism})"
    )

    if config.parallelism == 1:
        for done, task in enumerate(tasks, start=1):
            store.add_run(execute_task(task))
            _log_progress(done, len(tasks))
    else:
        with ProcessPoolExecutor(max_workers=config.parallelism) as executor:
            futures = {executor.submit(execute_task, task): task for task in tasks}
            for done, future in enumerate(as_completed(futures), start=1):
                try:
                    store.add_run(future.result())
                except Exception as e:
                    logger.error(f"Run {futures[future].key} failed: {e}")
                    raise
                _log_progress(done, len(tasks))

    store.compact()
    logger.info(f"Experiment finished: {len(store)} runs in {store.path}")
    return store
