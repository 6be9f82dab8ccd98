"""
Пул процессов для переборов. Все задачи чистые, результаты возвращаются в порядке входных данных,
поэтому отчет не зависит от числа процессов.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

logger = logging.getLogger("executors")

Item = TypeVar("Item")
Result = TypeVar("Result")


def map_tasks(func: Callable[[Item], Result], items: Iterable[Item], workers: int = 1) -> list[Result]:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    chunksize = max(1, len(items) // (workers * 4))
    logger.debug("Запуск %d задач в %d процессах (chunksize=%d)", len(items), workers, chunksize)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
