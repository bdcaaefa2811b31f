"""
Thread-pool helper for independent exact computations
Results come back keyed by input, so the output never depends on completion order
"""
import concurrent.futures
from typing import Callable, Dict, Hashable, Iterable, Optional, TypeVar

from tqdm import tqdm

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")


def parallel_map(
    func: Callable[[K], V],
    keys: Iterable[K],
    threads: int = 1,
    progress: bool = False,
    description: Optional[str] = None,
) -> Dict[K, V]:
    """Evaluate func on every key, at most `threads` at a time"""
    todo = list(dict.fromkeys(keys))
    results: Dict[K, V] = {}
    bar = tqdm(total=len(todo), desc=description, disable=not progress, leave=False)
    try:
        if threads <= 1 or len(todo) <= 1:
            for key in todo:
                results[key] = func(key)
                bar.update(1)
        else:
            with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
                future_to_key = {executor.submit(func, key): key for key in todo}
                for future in concurrent.futures.as_completed(future_to_key):
                    # first exception propagates to the caller
                    results[future_to_key[future]] = future.result()
                    bar.update(1)
    finally:
        bar.close()
    return {key: results[key] for key in todo}
