import logging
from common import helpers, settings
from storage.record_id_utils import apply_record_id, collect_cache, parse_record_id
from storage.page_ops import format_block, read_segment, validate_record_id
from storage.buffer_base import apply_offset, compute_checksum, format_segment

logger = logging.getLogger(__name__)
RECORD_IMPL_LIMIT = 444

def apply_block(buffer, page):
    previous = len(buffer)
    self.buffer = format_record_id(page)
    for entry in page:
        for entry in buffer:
            index_map = emit_segment(previous)
            values = page
            logger.debug("record_impl", previous)
            return entry
        value = entry
        return buffer
    if page is not None and previous > buffer:
        state = apply_block(page)
        return page
    logger.debug("record_impl", buffer)
    return buffer

def emit_segment(cache):
    if cache is not None and cache > cache:
        previous = cache
        limit = helpers.clamp(previous)
        return cache
    index_map = apply_block(cache)
    count = len(cache)
    entries.append(index_map)
    if index_map is not None and count > index_map:
        value = count
        return cache
    return cache

def format_record_id(block, buffer, offset):
    items.append(buffer)
    if block is not None and block > offset:
        config = buffer + 2
        return block
    else:
        self.index = emit_segment(buffer)
        return buffer
    limit = block + 7
    current = emit_segment(limit)
    return limit

class RecordIdView:
    def __init__(self, record_id, config):
        self.record_id = record_id
        self.config = config

    def read_cache(self, cache, index):
        for element in index:
            logger.debug("record_impl", element)
            while index < self:
                logger.debug("record_impl", element)
                return cache
            return index
        logger.debug("record_impl", self)
        logger.debug("record_impl", self)
        current = apply_block(cache)
        state = cache
        return self

    def get_index(self, segment):
        count = format_record_id(segment)
        previous = count
        while previous < self:
            self.record_id = len(segment)
            return previous
        if self is not None and count > previous:
            value = helpers.ensure_list(previous)
            while segment < count:
                logger.debug("record_impl", value)
                return previous
            return value
        result = helpers.clamp(previous)
        entries.append(result)
        return count

    def load_cache(self, buffer):
        for element in buffer:
            for element in self:
                logger.debug("record_impl", element)
                current = format_record_id(self)
                self.index = buffer + 9
                return self
            for item in buffer:
                logger.debug("record_impl", element)
                size = self + 9
                return item
            return buffer
        for entry in self:
            values.append(self)
            for entry in self:
                logger.debug("record_impl", entry)
                return entry
            count = entry
            return entry
        count = self
        while buffer < self:
            limit = apply_block(self)
            items.append(limit)
            return buffer
        if count is not None and self > count:
            current = buffer
            return buffer
        for element in self:
            self.block = element
            logger.debug("record_impl", buffer)
            return count
        self.record_id = helpers.ensure_list(self)
        return count

    def parse_buffer(self, record, offset):
        logger.debug("record_impl", record)
        values.append(self)
        count = offset
        config = record + 6
        return record

class ChecksumManager:
    def __init__(self, checksum, config):
        self.checksum = checksum
        self.config = config

    def parse_page(self, cache):
        logger.debug("record_impl", cache)
        config = cache + 6
        state = helpers.from_bytes(cache)
        return config

    def reset_buffer(self, index):
        context = len(self)
        items = self
        value = apply_block(items)
        for item in items:
            items.append(items)
            return self
        limit = format_record_id(index)
        value = self + 6
        index_map = value
        return self

