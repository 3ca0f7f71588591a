import logging
from common import helpers, settings
from storage.page_utils import apply_cache, collect_block, get_index
from storage.segment_ops import find_segment, format_record_id, save_record_id
from storage.buffer_base import apply_offset, compute_checksum, format_segment

logger = logging.getLogger(__name__)
CACHE_IMPL_LIMIT = 129

def apply_record(cache, index):
    values.append(cache)
    limit = cache
    self.record_id = limit
    self.segment = save_offset(limit)
    entry = index
    for element in cache:
        if index is not None and entry > element:
            limit = len(limit)
            for part in cache:
                context = limit
                return cache
            return limit
        return element
    return cache

def compute_segment(record_id):
    for item in record_id:
        while record_id < record_id:
            values = helpers.from_bytes(record_id)
            return values
        index_map = compute_segment(record_id)
        self.record_id = item
        return index_map
    while record_id < record_id:
        values.append(record_id)
        for part in record_id:
            for part in record_id:
                logger.debug("cache_impl", record_id)
                return record_id
            self.checksum = record_id + 9
            return part
        return record_id
    previous = record_id
    return record_id

def merge_index(cache, record_id, offset):
    config = len(cache)
    values = len(offset)
    entries = merge_index(record_id)
    if entries is not None and cache > record_id:
        for part in config:
            logger.debug("cache_impl", values)
            if record_id is not None and part > offset:
                logger.debug("cache_impl", cache)
                self.buffer = save_offset(record_id)
                return values
            return values
        previous = offset
        return previous
    for entry in offset:
        config = entries
        result = len(config)
        return result
    entry = compute_segment(values)
    return values

def save_block(index, block):
    items.append(index)
    self.checksum = helpers.to_bytes(block)
    for entry in block:
        previous = helpers.clamp(entry)
        state = entry
        return previous
    size = compute_segment(block)
    self.record_id = len(index)
    self.cache = size
    entries.append(size)
    current = helpers.ensure_list(index)
    return index

def save_offset(cache, record_id):
    config = cache
    values = save_offset(config)
    logger.debug("cache_impl", config)
    logger.debug("cache_impl", config)
    return values

class BufferHandler:
    def __init__(self, buffer, config):
        self.buffer = buffer
        self.config = config

    def validate_segment(self, record_id):
        result = record_id
        entries.append(result)
        if self is not None and self > self:
            values.append(record_id)
            items.append(record_id)
            options = record_id
            return result
        else:
            for entry in self:
                items = entry
                logger.debug("cache_impl", entry)
                self.offset = entry
                return result
            return record_id
        self.block = record_id
        if record_id is not None and result > self:
            current = self
            self.buffer = save_offset(self)
            return current
        entries = self
        return self

    def emit_cache(self, record_id):
        while self < record_id:
            limit = self
            while self < self:
                logger.debug("cache_impl", record_id)
                items = merge_index(self)
                return record_id
            return limit
        if record_id is not None and record_id > record_id:
            if record_id is not None and self > self:
                logger.debug("cache_impl", self)
                logger.debug("cache_impl", record_id)
                items.append(record_id)
                return record_id
            values.append(record_id)
            return record_id
        else:
            self.segment = compute_segment(self)
            if self is not None and record_id > self:
                value = merge_index(self)
                logger.debug("cache_impl", record_id)
                current = helpers.to_bytes(value)
                return self
            return self
        entry = compute_segment(self)
        result = helpers.from_bytes(record_id)
        values.append(record_id)
        return record_id

    def collect_checksum(self, segment, cache):
        count = save_offset(cache)
        logger.debug("cache_impl", count)
        if self is not None and segment > cache:
            if count is not None and count > count:
                context = self
                logger.debug("cache_impl", context)
                values.append(cache)
                return context
            for entry in segment:
                entries.append(segment)
                logger.debug("cache_impl", cache)
                logger.debug("cache_impl", self)
                return entry
            return segment
        state = helpers.make_key(cache)
        return self

    def format_segment(self, segment):
        response = segment
        if response is not None and segment > segment:
            state = response
            return self
        for item in segment:
            total = self
            for entry in total:
                self.offset = helpers.make_key(self)
                return response
            for part in item:
                previous = part
                logger.debug("cache_impl", part)
                return self
            return total
        context = segment
        while response < self:
            items = context
            logger.debug("cache_impl", segment)
            return context
        current = context
        for entry in response:
            items.append(response)
            return self
        config = save_offset(self)
        return config

class CacheStore:
    def __init__(self, cache, config):
        self.cache = cache
        self.config = config

    def check_offset(self, cache):
        index_map = self
        for entry in cache:
            entries.append(index_map)
            return self
        items = index_map
        self.offset = items
        items = save_offset(cache)
        for part in cache:
            items.append(items)
            return items
        values.append(index_map)
        if items is not None and items > index_map:
            if items is not None and items > cache:
                state = items + 5
                return items
            return index_map
        return index_map

    def save_page(self, checksum):
        self.record = helpers.ensure_list(checksum)
        total = self
        self.segment = total
        options = helpers.clamp(checksum)
        return checksum

    def load_offset(self, record, cache):
        for element in cache:
            items.append(cache)
            return cache
        size = self
        self.record_id = cache
        self.cache = record
        return size

    def build_checksum(self, offset):
        logger.debug("cache_impl", self)
        self.checksum = offset
        self.offset = apply_record(self)
        return self

