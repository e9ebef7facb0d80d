from functools import wraps
import inspect
import json
import os
import sys
from typing import get_args, get_origin

from pydantic import BaseModel
from rapidfuzz import fuzz, process

import config


# ====================
#  Status Output
# ====================
def status(message: str) -> None:
    """Progress chatter goes to stderr so command output stays deterministic."""
    print(message, file=sys.stderr)


def warn(message: str) -> None:
    print(f"Warning: {message}", file=sys.stderr)


def did_you_mean(value: str, choices: list[str], threshold: int = 50) -> str:
    """Suffix for "unknown X" errors, empty when nothing is close enough."""
    match = process.extractOne(value, choices, scorer=fuzz.ratio)
    if match is None or match[1] < threshold:
        return ""
    return f" (did you mean '{match[0]}'?)"


# =======================
#  File Caching Decorator
# =======================
def file_cache(cache_path: str):
    """
    Decorator to cache function results to a file.

    `cache_path` is a template formatted with the call's bound arguments and
    `cache_root` (read from config at call time), e.g.
    "{cache_root}/sequences/snapshot_n{n_max}.json".

    Automatically infers the data type from the function's return type annotation:
    - str -> text file
    - dict or list[dict] -> JSON file
    - BaseModel or list[BaseModel] -> JSON file (Pydantic)

    The decorator automatically supports a `force_refresh` parameter:
    - force_refresh=True: Execute function and overwrite cache
    - force_refresh=False (default): Use cache if available

    When config.CACHE_ENABLED is false the function is simply called.

    Example:
        @file_cache("{cache_root}/tables/{name}.json")
        def get_table(name: str) -> MyModel:
            return MyModel(...)

        get_table("f")  # Uses cache if available
        get_table("f", force_refresh=True)  # Forces refresh
    """

    def decorator(func):
        sig = inspect.signature(func)
        return_annotation = sig.return_annotation
        data_type = _infer_data_type(return_annotation)

        @wraps(func)
        def wrapper(*args, **kwargs):
            force_refresh = kwargs.pop("force_refresh", False)
            if not config.CACHE_ENABLED:
                return func(*args, **kwargs)

            bound = sig.bind(*args, **kwargs)
            bound.apply_defaults()
            path = cache_path.format(cache_root=config.CACHE_ROOT, **bound.arguments)

            if not force_refresh and os.path.exists(path):
                try:
                    status(f"Loading from cache: {path}")
                    with open(path, "r") as f:
                        if data_type == "text":
                            return f.read()
                        data = json.load(f)
                    if data_type == "json":
                        return data
                    origin = get_origin(return_annotation)
                    if origin is list:
                        model_class = get_args(return_annotation)[0]
                        return [model_class.model_validate(item) for item in data]
                    return return_annotation.model_validate(data)
                except Exception as e:
                    # If cache loading fails, proceed to execute function
                    warn(f"Failed to load cache from {path}: {e}")

            result = func(*args, **kwargs)

            try:
                os.makedirs(os.path.dirname(path), exist_ok=True)
                status(f"Saving to cache: {path}")
                with open(path, "w") as f:
                    if data_type == "text":
                        f.write(result)
                    elif data_type == "json":
                        json.dump(result, f)
                    elif isinstance(result, list):
                        json.dump([item.model_dump(mode="json") for item in result], f)
                    else:
                        json.dump(result.model_dump(mode="json"), f)
            except Exception as e:
                warn(f"Failed to save cache to {path}: {e}")

            return result

        return wrapper

    return decorator


def _infer_data_type(return_annotation) -> str:
    """
    Infer the cache data type from a function's return type annotation.

    Returns one of: "text", "json", "pydantic"
    """
    if return_annotation is inspect.Parameter.empty:
        raise ValueError(
            "Function must have a return type annotation for file_cache decorator"
        )

    origin = get_origin(return_annotation)

    if return_annotation is str:
        return "text"
    if return_annotation is dict or origin is dict:
        return "json"
    if origin is list:
        args = get_args(return_annotation)
        if args:
            inner_type = args[0]
            if inner_type is dict or get_origin(inner_type) is dict:
                return "json"
            if isinstance(inner_type, type) and issubclass(inner_type, BaseModel):
                return "pydantic"
    if isinstance(return_annotation, type) and issubclass(return_annotation, BaseModel):
        return "pydantic"

    raise ValueError(
        f"Cannot infer cache type from return annotation: {return_annotation}. "
        f"Supported types: str, dict, list[dict], BaseModel, list[BaseModel]"
    )
