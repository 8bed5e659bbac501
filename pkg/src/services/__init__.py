from .skorokhod_service import SkorokhodService

__all__ = ["SkorokhodService"]
