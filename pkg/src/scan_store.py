"""
Scan store module for persisting per-curve scan results.
Lets long scans resume without recomputing curves already seen.
"""
import json
import logging
from datetime import datetime
from pathlib import Path

logger = logging.getLogger(__name__)


class ScanStore:
    """Handle scan result storage and retrieval, keyed by curve label."""

    def __init__(self, storage_file):
        """
        Initialize scan storage.

        Args:
            storage_file (str or Path): Path to the JSON storage file
        """
        self.storage_file = Path(storage_file)
        self._ensure_file_exists()

    def _ensure_file_exists(self):
        """Create the storage file if it doesn't exist."""
        if not self.storage_file.exists():
            self.storage_file.parent.mkdir(parents=True, exist_ok=True)
            self._save_data({})
            logger.info(f"Created new scan storage file: {self.storage_file}")

    def _load_data(self):
        """
        Load scan entries from the storage file.

        Returns:
            dict: label -> scan entry
        """
        try:
            with open(self.storage_file, "r", encoding="utf-8") as f:
                data = json.load(f)
                return data if isinstance(data, dict) else {}
        except json.JSONDecodeError as e:
            logger.error(f"Error decoding JSON from {self.storage_file}: {e}")
            return {}
        except Exception as e:
            logger.error(f"Error loading scan results: {e}")
            return {}

    def _save_data(self, data):
        """
        Save scan entries to the storage file.

        Args:
            data (dict): label -> scan entry
        """
        try:
            with open(self.storage_file, "w", encoding="utf-8") as f:
                json.dump(data, f, indent=4, ensure_ascii=False)
            logger.debug(f"Saved scan results to {self.storage_file}")
        except Exception as e:
            logger.error(f"Error saving scan results: {e}")

    def add_entries(self, entries):
        """
        Store several entries with a single write.

        Args:
            entries (dict): label -> entry

        Returns:
            bool: True if successful, False otherwise
        """
        try:
            data = self._load_data()
            stamp = datetime.now().isoformat()
            for label, entry in entries.items():
                data[label] = dict(entry, scanned_at=stamp)
            self._save_data(data)
            return True
        except Exception as e:
            logger.error(f"Error adding {len(entries)} scan entries: {e}")
            return False

    def get_entry(self, label):
        """
        Get the scan entry of a curve.

        Returns:
            dict or None: entry if found
        """
        return self._load_data().get(label)

    def remove_entry(self, label):
        """
        Remove the scan entry of a curve.

        Returns:
            bool: True if an entry was removed
        """
        try:
            data = self._load_data()
            if label in data:
                del data[label]
                self._save_data(data)
                logger.info(f"Removed scan entry for {label}")
                return True
            logger.warning(f"No scan entry found for {label}")
            return False
        except Exception as e:
            logger.error(f"Error removing scan entry for {label}: {e}")
            return False

    def get_count(self):
        return len(self._load_data())
