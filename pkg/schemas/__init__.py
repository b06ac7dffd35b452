from .documents import ErrorDocument, InputDocument, OutputDocument, load_point_set, parse_document

__all__ = ["ErrorDocument", "InputDocument", "OutputDocument", "load_point_set", "parse_document"]
