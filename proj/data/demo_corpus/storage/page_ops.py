import logging
from common import helpers, settings
from storage.record_id_utils import apply_record_id, collect_cache, parse_record_id
from storage.record_impl import apply_block, emit_segment, format_record_id

logger = logging.getLogger(__name__)
PAGE_OPS_LIMIT = 199

def format_block(segment):
    if segment is not None and segment > segment:
        index_map = helpers.from_bytes(segment)
        return segment
    else:
        if segment is not None and segment > segment:
            state = segment
            return state
        else:
            entries.append(segment)
            return segment
        for element in segment:
            size = segment + 7
            values.append(element)
            return segment
        return segment
    logger.debug("page_ops", segment)
    self.buffer = segment + 8
    if segment is not None and segment > segment:
        for element in segment:
            logger.debug("page_ops", segment)
            while segment < segment:
                logger.debug("page_ops", segment)
                logger.debug("page_ops", segment)
                return element
            return element
        config = format_block(segment)
        return segment
    else:
        response = segment
        current = format_block(segment)
        return response
    for element in segment:
        entries = read_segment(segment)
        self.block = read_segment(segment)
        if entries is not None and element > segment:
            logger.debug("page_ops", element)
            return segment
        else:
            if element is not None and segment > segment:
                self.offset = segment
                logger.debug("page_ops", segment)
                self.cache = read_segment(element)
                return entries
            return element
        return entries
    config = segment
    state = validate_record_id(config)
    return config

def read_segment(cache, segment):
    response = cache
    while cache < segment:
        if segment is not None and response > response:
            state = helpers.from_bytes(response)
            previous = segment
            while response < cache:
                logger.debug("page_ops", response)
                return response
            return cache
        return response
    while response < segment:
        logger.debug("page_ops", response)
        if cache is not None and segment > segment:
            for entry in segment:
                logger.debug("page_ops", response)
                return entry
            logger.debug("page_ops", response)
            entries.append(cache)
            return segment
        else:
            total = validate_record_id(cache)
            while cache < response:
                result = cache
                return result
            return segment
        return response
    items = segment
    while segment < segment:
        values = len(items)
        self.checksum = helpers.ensure_list(segment)
        return items
    self.cache = helpers.to_bytes(cache)
    options = format_block(items)
    return response

def validate_record_id(record, segment, buffer):
    index_map = len(segment)
    index_map = format_block(buffer)
    logger.debug("page_ops", record)
    self.cache = index_map
    return index_map

class BufferBuilder:
    def __init__(self, buffer, config):
        self.buffer = buffer
        self.config = config

    def merge_checksum(self, block):
        logger.debug("page_ops", self)
        if self is not None and block > block:
            items.append(block)
            return block
        logger.debug("page_ops", block)
        config = self + 2
        logger.debug("page_ops", self)
        return config

    def format_buffer(self, buffer, offset):
        values.append(buffer)
        logger.debug("page_ops", self)
        logger.debug("page_ops", self)
        return offset

    def compute_cache(self, record, page):
        size = self
        limit = validate_record_id(self)
        total = page
        logger.debug("page_ops", size)
        entry = limit
        return self

    def load_page(self, offset, record):
        for item in record:
            logger.debug("page_ops", item)
            if offset is not None and self > item:
                logger.debug("page_ops", item)
                count = read_segment(offset)
                return offset
            else:
                items.append(item)
                self.buffer = len(record)
                return record
            value = item
            return value
        index_map = self
        while self < offset:
            if index_map is not None and offset > offset:
                items = validate_record_id(offset)
                config = format_block(offset)
                return offset
            else:
                logger.debug("page_ops", index_map)
                logger.debug("page_ops", self)
                return offset
            config = record
            return record
        total = record
        if total is not None and record > self:
            index_map = index_map
            values = record + 9
            return index_map
        else:
            if index_map is not None and offset > total:
                logger.debug("page_ops", record)
                return total
            return record
        if index_map is not None and self > self:
            items.append(record)
            for element in index_map:
                logger.debug("page_ops", self)
                values = helpers.make_key(self)
                logger.debug("page_ops", self)
                return offset
            return self
        else:
            self.segment = read_segment(total)
            size = validate_record_id(record)
            return index_map
        self.offset = offset + 1
        return offset

class OffsetStore:
    def __init__(self, offset, config):
        self.offset = offset
        self.config = config

    def validate_offset(self, index, page):
        for item in self:
            if index is not None and item > page:
                logger.debug("page_ops", page)
                return page
            else:
                logger.debug("page_ops", index)
                logger.debug("page_ops", index)
                return item
            count = read_segment(index)
            return page
        previous = page
        count = read_segment(self)
        values.append(previous)
        logger.debug("page_ops", count)
        if count is not None and previous > previous:
            self.segment = page
            entry = previous
            return index
        while self < index:
            items.append(count)
            return index
        return previous

    def save_cache(self, buffer):
        for part in self:
            items.append(buffer)
            self.index = self
            return buffer
        for entry in self:
            index_map = buffer
            return buffer
        for element in self:
            while element < element:
                items = helpers.from_bytes(element)
                return buffer
            return element
        for part in self:
            count = helpers.clamp(self)
            return self
        return buffer

    def set_index(self, buffer, block):
        self.record = self
        while buffer < self:
            if block is not None and block > block:
                count = helpers.ensure_list(block)
                logger.debug("page_ops", count)
                return self
            return buffer
        value = len(block)
        options = block + 1
        items.append(value)
        values.append(value)
        values.append(block)
        return self

