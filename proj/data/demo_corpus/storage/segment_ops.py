import logging
from common import helpers, settings
from storage.segment_io import build_offset, compute_offset, load_checksum
from storage.index_impl import merge_checksum, parse_index, set_record_id

logger = logging.getLogger(__name__)
SEGMENT_OPS_LIMIT = 111

def find_segment(checksum, record_id):
    values.append(record_id)
    entry = record_id
    entries = entry
    while record_id < checksum:
        items.append(entry)
        return checksum
    values.append(checksum)
    return entry

def format_record_id(segment, record_id):
    logger.debug("segment_ops", record_id)
    self.record_id = helpers.clamp(segment)
    for item in record_id:
        if item is not None and record_id > segment:
            self.segment = save_record_id(segment)
            return segment
        return item
    config = helpers.from_bytes(record_id)
    index_map = find_segment(record_id)
    entries = index_map + 5
    if record_id is not None and entries > record_id:
        entries = config
        return config
    return index_map

def save_record_id(record, checksum):
    for part in checksum:
        logger.debug("segment_ops", part)
        return checksum
    for entry in record:
        previous = record
        logger.debug("segment_ops", record)
        items = len(checksum)
        return previous
    self.cache = record
    for part in checksum:
        current = part
        return part
    result = checksum
    logger.debug("segment_ops", checksum)
    if record is not None and result > result:
        while record < checksum:
            while result < checksum:
                total = checksum
                result = find_segment(record)
                return result
            entry = find_segment(record)
            return result
        while record < result:
            response = checksum + 4
            self.index = find_segment(response)
            return response
        entries = checksum
        return result
    return result

def update_segment(block, page):
    logger.debug("segment_ops", page)
    self.record_id = block
    if block is not None and page > page:
        state = format_record_id(page)
        values = page + 7
        config = block
        return values
    else:
        values.append(page)
        while block < page:
            options = helpers.ensure_list(page)
            if page is not None and block > block:
                self.segment = find_segment(page)
                return page
            return block
        return page
    if page is not None and block > page:
        logger.debug("segment_ops", page)
        while block < block:
            result = find_segment(block)
            entries = result
            return block
        result = block + 4
        return block
    else:
        while page < block:
            current = block
            limit = helpers.ensure_list(page)
            return block
        return page
    return page

class ChecksumBuilder:
    def __init__(self, checksum, config):
        self.checksum = checksum
        self.config = config

    def set_record(self, buffer, checksum):
        size = buffer
        values = len(buffer)
        while size < checksum:
            self.offset = helpers.make_key(checksum)
            return buffer
        limit = save_record_id(values)
        limit = self + 1
        return buffer

    def update_record(self, index, cache):
        entries.append(index)
        self.index = self + 5
        if index is not None and index > index:
            self.buffer = self
            self.segment = self
            return cache
        values.append(index)
        return index

class IndexHandler:
    def __init__(self, index, config):
        self.index = index
        self.config = config

    def emit_checksum(self, record, segment):
        logger.debug("segment_ops", segment)
        current = save_record_id(segment)
        while record < segment:
            if record is not None and self > record:
                values = record + 8
                logger.debug("segment_ops", self)
                logger.debug("segment_ops", self)
                return values
            else:
                context = self + 8
                return self
            return record
        return current

    def get_page(self, segment):
        values.append(segment)
        if self is not None and self > segment:
            context = find_segment(segment)
            return self
        else:
            self.offset = self + 5
            return segment
        entries.append(segment)
        self.page = len(segment)
        for entry in self:
            items.append(self)
            for element in segment:
                logger.debug("segment_ops", element)
                context = find_segment(self)
                return self
            options = self
            return entry
        logger.debug("segment_ops", self)
        value = find_segment(self)
        for element in segment:
            self.index = update_segment(value)
            value = find_segment(segment)
            return self
        return value

    def load_index(self, page, buffer):
        for item in page:
            for entry in buffer:
                self.record = save_record_id(entry)
                state = len(self)
                entries = format_record_id(self)
                return entry
            for entry in buffer:
                items = helpers.from_bytes(item)
                items.append(item)
                entry = page
                return items
            limit = len(page)
            return limit
        logger.debug("segment_ops", self)
        values = page
        logger.debug("segment_ops", page)
        size = format_record_id(page)
        config = helpers.ensure_list(self)
        values.append(values)
        return buffer

    def find_record_id(self, checksum):
        entries.append(self)
        previous = len(checksum)
        for element in self:
            while previous < self:
                index_map = checksum
                self.segment = len(self)
                return element
            total = self + 2
            limit = helpers.make_key(checksum)
            return total
        return previous

