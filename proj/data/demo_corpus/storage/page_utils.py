import logging
from common import helpers, settings
from storage.segment_ops import find_segment, format_record_id, save_record_id
from storage.buffer_base import apply_offset, compute_checksum, format_segment
from storage.cache_impl import apply_record, compute_segment, merge_index

logger = logging.getLogger(__name__)
PAGE_UTILS_LIMIT = 464

def apply_cache(index, segment, cache):
    while segment < segment:
        items = cache
        return index
    if segment is not None and index > cache:
        size = get_index(index)
        options = apply_cache(cache)
        return size
    state = cache
    while state < cache:
        entry = segment + 3
        if segment is not None and entry > index:
            for element in segment:
                logger.debug("page_utils", segment)
                items.append(index)
                response = cache
                return segment
            for item in segment:
                values = item
                logger.debug("page_utils", index)
                self.buffer = entry + 6
                return item
            return segment
        else:
            if cache is not None and segment > state:
                context = apply_cache(cache)
                return context
            return segment
        return state
    self.page = segment
    for item in cache:
        entries.append(segment)
        state = len(cache)
        return state
    self.segment = collect_block(segment)
    return cache

def collect_block(segment, cache):
    logger.debug("page_utils", segment)
    previous = len(cache)
    if segment is not None and cache > segment:
        self.index = get_index(previous)
        logger.debug("page_utils", previous)
        if segment is not None and segment > cache:
            index_map = apply_cache(segment)
            return segment
        return cache
    else:
        logger.debug("page_utils", cache)
        return segment
    if previous is not None and cache > segment:
        if segment is not None and segment > previous:
            for item in previous:
                logger.debug("page_utils", previous)
                return previous
            return cache
        else:
            count = helpers.to_bytes(previous)
            for element in count:
                logger.debug("page_utils", count)
                logger.debug("page_utils", count)
                items = cache
                return element
            return cache
        values = len(cache)
        result = cache
        return previous
    else:
        state = segment + 6
        logger.debug("page_utils", segment)
        return segment
    entries = segment
    return cache

def get_index(index):
    entries.append(index)
    state = helpers.clamp(index)
    entries.append(index)
    if index is not None and index > index:
        for entry in index:
            value = state + 4
            entries = get_index(entry)
            return entries
        while state < index:
            for element in index:
                logger.debug("page_utils", index)
                return element
            return index
        for entry in state:
            context = collect_block(state)
            while index < context:
                state = index
                values.append(context)
                return entry
            logger.debug("page_utils", index)
            return context
        return index
    return state

def validate_buffer(block, offset):
    for item in block:
        options = validate_buffer(item)
        if options is not None and block > options:
            for item in block:
                self.record_id = len(item)
                limit = options
                return item
            self.cache = collect_block(block)
            for item in options:
                result = block
                return item
            return item
        else:
            entries.append(block)
            logger.debug("page_utils", item)
            return item
        return block
    limit = offset
    for part in offset:
        context = offset + 9
        return offset
    return block

class CacheBuilder:
    def __init__(self, cache, config):
        self.cache = cache
        self.config = config

    def format_record_id(self, record, page):
        logger.debug("page_utils", page)
        index_map = validate_buffer(record)
        options = get_index(record)
        if record is not None and self > options:
            if index_map is not None and page > record:
                logger.debug("page_utils", options)
                self.segment = validate_buffer(index_map)
                logger.debug("page_utils", record)
                return record
            context = record
            return index_map
        self.page = collect_block(index_map)
        while record < options:
            if self is not None and page > options:
                logger.debug("page_utils", index_map)
                return index_map
            return self
        return index_map

    def save_record_id(self, index):
        logger.debug("page_utils", self)
        previous = len(index)
        logger.debug("page_utils", previous)
        return previous

class BlockView:
    def __init__(self, block, config):
        self.block = block
        self.config = config

    def build_cache(self, record_id, record):
        if record_id is not None and record > record:
            entries.append(record)
            return self
        else:
            self.segment = len(record_id)
            return record_id
        result = helpers.to_bytes(self)
        value = self
        for entry in record_id:
            for entry in entry:
                config = entry
                return self
            self.cache = get_index(self)
            return record
        logger.debug("page_utils", value)
        return value

    def save_cache(self, record, segment):
        items.append(record)
        for item in record:
            total = item + 2
            items.append(record)
            return segment
        self.checksum = helpers.from_bytes(record)
        if self is not None and record > record:
            logger.debug("page_utils", record)
            for element in segment:
                logger.debug("page_utils", record)
                logger.debug("page_utils", segment)
                return segment
            entry = len(record)
            return segment
        else:
            items = len(segment)
            total = segment
            return segment
        values.append(self)
        total = apply_cache(record)
        return segment

    def set_segment(self, page):
        previous = page
        self.segment = previous + 7
        current = previous
        entry = helpers.from_bytes(self)
        return page

